##############################################################################
#
# Copyright (C) SurvivalLib contributors 2026, all rights reserved.
#
# This content is made available according to terms specified in
# LICENSE.txt under the top-level directory of this distribution.
#
##############################################################################
"""Cox proportional hazards model fitted by Newton-Raphson."""
from collections import namedtuple

import numpy as np
from scipy import linalg, stats

from .base.CoxModel import CoxModel
from .base.CumulativeHazard import CumulativeHazard
from .base.SurvivalCurve import SurvivalCurve
from .base.types import TieMethod
from .exceptions import ConvergenceError, DataError, SingularMatrixError
from .helpers.SurvivalLibLog import SURVLOG
from .spec.CoxFitOptions import CoxFitOptions

LOG = SURVLOG.add_log('cox')

CoxSummaryRow = namedtuple('CoxSummaryRow', [
    'feature', 'coef', 'hazard_ratio', 'se', 'ci_low_coef', 'ci_high_coef',
    'ci_low_hr', 'ci_high_hr', 'z', 'p_value'])


class _RiskSets(object):
    """Per event time tallies of a dataset sorted by time.

    Holds the row expansion used by both tie methods: one row per death,
    row r belonging to event time k_r with Efron fraction f_r.
    """

    def __init__(self, d, tie_method):
        times = np.asarray(d.times, dtype=float)
        order = np.argsort(times, kind='mergesort')
        self.times = times[order]
        self.events = np.asarray(d.events, dtype=bool)[order]
        self.X = np.asarray(d.X, dtype=float)[order]
        self.event_times, self.deaths = np.unique(self.times[self.events], return_counts=True)
        self.start = np.searchsorted(self.times, self.event_times, side='left')
        # index of each death's event time
        self.death_slot = np.searchsorted(self.event_times, self.times[self.events])
        total = int(self.deaths.sum())
        self.row_slot = np.repeat(np.arange(len(self.deaths)), self.deaths)
        if TieMethod(tie_method) == 'efron':
            offsets = np.arange(total) - np.repeat(np.cumsum(self.deaths) - self.deaths, self.deaths)
            self.fraction = offsets / np.repeat(self.deaths, self.deaths).astype(float)
        else:
            self.fraction = np.zeros(total)

    def sums(self, beta, order=2):
        """Return (shift, eta, A0, A1, A2) on the death rows."""
        eta = self.X.dot(beta)
        shift = eta.max() if len(eta) else 0.0
        w = np.exp(eta - shift)
        K = len(self.event_times)
        p = self.X.shape[1]
        events = self.events

        risk0 = np.cumsum(w[::-1])[::-1][self.start]
        dead0 = np.bincount(self.death_slot, weights=w[events], minlength=K)
        A0 = risk0[self.row_slot] - self.fraction * dead0[self.row_slot]
        A1 = A2 = None
        if order >= 1:
            wx = w[:, None] * self.X
            risk1 = np.cumsum(wx[::-1], axis=0)[::-1][self.start]
            dead1 = np.zeros((K, p))
            np.add.at(dead1, self.death_slot, wx[events])
            A1 = risk1[self.row_slot] - self.fraction[:, None] * dead1[self.row_slot]
        if order >= 2:
            wxx = wx[:, :, None] * self.X[:, None, :]
            risk2 = np.cumsum(wxx[::-1], axis=0)[::-1][self.start]
            dead2 = np.zeros((K, p, p))
            np.add.at(dead2, self.death_slot, wxx[events])
            A2 = risk2[self.row_slot] - self.fraction[:, None, None] * dead2[self.row_slot]
        return shift, eta, A0, A1, A2


def _check_beta(beta, d):
    beta = np.asarray(beta, dtype=float).reshape(-1)
    if len(beta) != d.p:
        raise ValueError('beta has {} entries for {} features'.format(len(beta), d.p))
    return beta


def log_partial_likelihood(beta, d, tie_method='efron'):
    """Return the log partial likelihood of beta on d."""
    beta = _check_beta(beta, d)
    risk = _RiskSets(d, tie_method)
    if not len(risk.deaths):
        return 0.0
    shift, eta, A0, _, _ = risk.sums(beta, order=0)
    return float(eta[risk.events].sum() - np.sum(shift + np.log(A0)))


def cox_gradient(beta, d, tie_method='efron', risk=None):
    """Return (log likelihood, score vector, Hessian) at beta."""
    beta = _check_beta(beta, d)
    risk = risk or _RiskSets(d, tie_method)
    p = d.p
    if not len(risk.deaths):
        return 0.0, np.zeros(p), np.zeros((p, p))
    shift, eta, A0, A1, A2 = risk.sums(beta)
    mean = A1 / A0[:, None]
    loglik = eta[risk.events].sum() - np.sum(shift + np.log(A0))
    score = risk.X[risk.events].sum(axis=0) - mean.sum(axis=0)
    hessian = -(np.sum(A2 / A0[:, None, None], axis=0) - mean.T.dot(mean))
    return float(loglik), score, (hessian + hessian.T) / 2.0


def _factor(information, feature_names):
    diagonal = np.diag(information)
    try:
        if not np.all(np.isfinite(information)):
            raise linalg.LinAlgError('non-finite information matrix')
        if np.any(diagonal <= 0):
            raise linalg.LinAlgError('non-positive information diagonal')
        unit = np.sqrt(diagonal)
        if np.linalg.cond(information / np.outer(unit, unit)) > 1e12:
            raise linalg.LinAlgError('ill-conditioned information matrix')
        return linalg.cho_factor(information, lower=True)
    except linalg.LinAlgError:
        scale = max(float(np.max(np.abs(diagonal))), 1e-300) if len(diagonal) else 1.0
        suspects = [f for f, v in zip(feature_names, diagonal) if v <= 1e-10 * scale]
        raise SingularMatrixError(
            'information matrix is singular; near-collinear features: {}'.format(
                ', '.join(suspects or feature_names)), features=suspects or feature_names)


def _scaled_score(score, information):
    diagonal = np.sqrt(np.clip(np.diag(information), 1e-300, None))
    return float(np.max(np.abs(score) / diagonal)) if len(score) else 0.0


def _check_fit_data(d):
    if d.p < 1:
        raise DataError('the Cox model needs at least one feature')
    events = int(np.sum(d.events))
    if events < 1:
        raise DataError('the Cox model needs at least one event')
    constant = [name for j, name in enumerate(d.feature_names) if np.ptp(d.X[:, j]) == 0]
    if constant:
        raise SingularMatrixError('constant covariate(s): {}'.format(', '.join(constant)),
                                  features=constant)
    if d.p >= events:
        LOG.warning('{} features for {} events; estimates will be unstable'.format(d.p, events))


def cox_fit(d, options=None):
    """Return a CoxModel maximising the partial likelihood on d.

    Steps that lower the objective are halved up to step_halving_max times.
    Convergence needs both a log likelihood change below tolerance and a
    scaled score below gradient_tolerance.
    """
    options = options or CoxFitOptions()
    _check_fit_data(d)
    names = d.feature_names
    risk = _RiskSets(d, options.tie_method)

    beta = np.zeros(d.p)
    loglik, score, hessian = cox_gradient(beta, d, options.tie_method, risk)
    null_loglik = loglik
    information = -hessian
    factor = _factor(information, names)
    converged = False
    iteration = 0

    while iteration < options.max_iterations:
        iteration += 1
        step = linalg.cho_solve(factor, score)
        candidate = beta + step
        new_loglik, new_score, new_hessian = cox_gradient(candidate, d, options.tie_method, risk)
        halvings = 0
        while (not np.isfinite(new_loglik) or new_loglik < loglik) and halvings < options.step_halving_max:
            halvings += 1
            step = step / 2.0
            candidate = beta + step
            new_loglik, new_score, new_hessian = cox_gradient(candidate, d, options.tie_method, risk)
        if not np.isfinite(new_loglik) or new_loglik < loglik - 1e-12 * (1.0 + abs(loglik)):
            if _scaled_score(score, information) < options.gradient_tolerance:
                converged = True
                break
            raise ConvergenceError(
                'step halving failed to increase the partial likelihood at iteration {}'.format(iteration),
                last_iterate=beta.copy(), iterations=iteration)
        if halvings:
            LOG.debug('Iteration {}: step halved {} time(s)'.format(iteration, halvings))
        change = new_loglik - loglik
        beta, loglik, score, information = candidate, new_loglik, new_score, -new_hessian
        factor = _factor(information, names)
        LOG.debug('Iteration {}: loglik {:.10f}'.format(iteration, loglik))
        if abs(change) < options.tolerance and _scaled_score(score, information) < options.gradient_tolerance:
            converged = True
            break

    if not converged:
        raise ConvergenceError(
            'no convergence after {} iterations'.format(options.max_iterations),
            last_iterate=beta.copy(), iterations=iteration)

    covariance = linalg.cho_solve(factor, np.eye(d.p))
    covariance = (covariance + covariance.T) / 2.0
    LOG.info('Converged in {} iterations, log partial likelihood {:.6f}'.format(iteration, loglik))
    model = CoxModel(names, beta, covariance, loglik, iteration, options.tie_method,
                     null_log_likelihood=null_loglik, n_samples=d.n,
                     n_events=int(np.sum(d.events)))
    return model.with_baseline(breslow_baseline(model, d))


def cox_summary(m, confidence=0.95):
    """Return one CoxSummaryRow per feature, in feature order."""
    if not 0 < confidence < 1:
        raise ValueError('confidence must lie in (0, 1), got {}'.format(confidence))
    quantile = stats.norm.ppf(0.5 + confidence / 2.0)
    rows = []
    for name, coef, se in zip(m.feature_names, m.beta, m.standard_errors):
        coef, se = float(coef), float(se)
        z = coef / se if se > 0 else 0.0
        low, high = coef - quantile * se, coef + quantile * se
        rows.append(CoxSummaryRow(
            feature=name, coef=coef, hazard_ratio=float(np.exp(coef)), se=se,
            ci_low_coef=low, ci_high_coef=high,
            ci_low_hr=float(np.exp(low)), ci_high_hr=float(np.exp(high)),
            z=z, p_value=float(2.0 * stats.norm.sf(abs(z)))))
    return rows


def breslow_baseline(m, d):
    """Return the Breslow cumulative baseline hazard of m on its training data."""
    if list(m.feature_names) != d.feature_names:
        raise ValueError('dataset features differ from the model features')
    times = np.asarray(d.times, dtype=float)
    events = np.asarray(d.events, dtype=bool)
    event_times, deaths = np.unique(times[events], return_counts=True)
    if not len(event_times):
        return CumulativeHazard([], [])
    eta = np.asarray(d.X, dtype=float).dot(m.beta)
    shift = eta.max()
    order = np.argsort(times, kind='mergesort')
    w = np.exp(eta[order] - shift)
    risk = np.cumsum(w[::-1])[::-1][np.searchsorted(times[order], event_times, side='left')]
    increments = deaths * np.exp(-shift) / risk
    return CumulativeHazard(event_times, np.cumsum(increments))


def cox_predict_risk(m, x):
    """Return the linear predictor beta'x (one value, or one per row)."""
    x = np.asarray(x, dtype=float)
    if x.shape[-1] != m.p:
        raise ValueError('expected {} covariates, got {}'.format(m.p, x.shape[-1]))
    risk = x.dot(m.beta)
    return float(risk) if np.ndim(risk) == 0 else risk


def cox_predict_survival(m, x):
    """Return S(t|x) = exp(-H0(t) exp(beta'x)) on the baseline grid."""
    if m.baseline is None:
        raise ValueError('model has no baseline hazard')
    x = np.asarray(x, dtype=float).reshape(-1)
    scale = np.exp(cox_predict_risk(m, x))
    return SurvivalCurve(m.baseline.times, np.exp(-m.baseline.hazard * scale))
