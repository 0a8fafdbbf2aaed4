#!/usr/bin/env python

##############################################################################
#
# Copyright (C) SurvivalLib contributors 2026, all rights reserved.
#
# This content is made available according to terms specified in
# LICENSE.txt under the top-level directory of this distribution.
#
##############################################################################

"""survivallib - censoring-aware survival analysis.

This module provides a single integration point for the library: data
types, preprocessing, Kaplan-Meier, Cox and random survival forest models,
and the evaluation metrics.

"""

# PEP-396 version. (https://www.python.org/dev/peps/pep-0396/)

__version__ = "1.0.0"

import logging

from .lib.base.SurvivalSample import SurvivalSample
from .lib.base.Dataset import Dataset
from .lib.base.SurvivalCurve import SurvivalCurve
from .lib.base.CumulativeHazard import CumulativeHazard
from .lib.base.RawTable import RawTable
from .lib.base.ImputeModel import ImputeModel
from .lib.base.CoxModel import CoxModel
from .lib.base.SurvivalTree import SurvivalTree
from .lib.base.SurvivalForest import SurvivalForest

from .lib.spec.KmOptions import KmOptions
from .lib.spec.CoxFitOptions import CoxFitOptions
from .lib.spec.RsfOptions import RsfOptions
from .lib.spec.PreprocessSpec import PreprocessSpec
from .lib.spec.RunConfig import RunConfig

from .lib.exceptions import (
    SurvivalLibError,
    DataError,
    IngestError,
    MissingArtifactError,
    NumericError,
    ConvergenceError,
    SingularMatrixError,
)

from .lib.functions import curve_eval, chf_eval, chf_to_survival, curve_median, group_counts
from .lib.ingest import (
    load_table,
    merge_on_key,
    rename_columns,
    drop_empty_columns,
    select_columns,
    drop_missing_labels,
    fit_impute,
    apply_impute,
    encode_categoricals,
    iqr_fences,
    remove_outliers_iqr,
    table_to_dataset,
    stratified_split,
    bin_age_groups,
    censoring_summary,
    feature_correlations,
    PreprocessPipeline,
)
from .lib.km import km_fit, km_stratified
from .lib.cox import (
    CoxSummaryRow,
    log_partial_likelihood,
    cox_gradient,
    cox_fit,
    cox_summary,
    breslow_baseline,
    cox_predict_risk,
    cox_predict_survival,
)
from .lib.rsf import (
    nelson_aalen,
    logrank_split_statistic,
    rsf_fit,
    rsf_predict_chf,
    rsf_predict_survival,
    rsf_risk_score,
    rsf_oob_cindex,
)
from .lib.metrics import (
    ConcordanceResult,
    RocResult,
    EvaluationReport,
    concordance_index,
    roc_at_horizon,
    roc_auc_rank,
)
from .lib.plots import render_step_svg
from .lib.helpers.utils import load_config

LOG = logging.getLogger('survivallib')
