##############################################################################
#
# Copyright (C) SurvivalLib contributors 2026, all rights reserved.
#
# This content is made available according to terms specified in
# LICENSE.txt under the top-level directory of this distribution.
#
##############################################################################
"""Random survival forest with log-rank splitting and Nelson-Aalen leaves."""
import numpy as np
from joblib import Parallel, delayed

from .base.CumulativeHazard import CumulativeHazard
from .base.SurvivalForest import SurvivalForest
from .base.SurvivalTree import LEAF, SurvivalTree
from .exceptions import DataError
from .functions import chf_to_survival
from .helpers.SurvivalLibLog import SURVLOG
from .metrics import concordance_index
from .spec.RsfOptions import RsfOptions

LOG = SURVLOG.add_log('rsf')

# options that do not change the fitted forest
RUNTIME_OPTIONS = ('n_jobs',)


def weighted_tallies(times, events, weights=None):
    """Return (event_times, at_risk, deaths) with per-sample weights."""
    times = np.asarray(times, dtype=float)
    events = np.asarray(events, dtype=bool)
    weights = np.ones(len(times)) if weights is None else np.asarray(weights, dtype=float)
    if not (len(times) == len(events) == len(weights)):
        raise ValueError('times, events and weights must have equal length')
    order = np.argsort(times, kind='mergesort')
    times, events, weights = times[order], events[order], weights[order]
    dead = events & (weights > 0)
    event_times = np.unique(times[dead])
    deaths = np.bincount(np.searchsorted(event_times, times[dead]), weights=weights[dead],
                         minlength=len(event_times))
    at_risk = np.cumsum(weights[::-1])[::-1]
    at_risk = at_risk[np.searchsorted(times, event_times, side='left')] if len(event_times) else at_risk[:0]
    return event_times, at_risk, deaths


def nelson_aalen(times, events, weights=None):
    """Return H(t) = sum over event times t_i <= t of d_i / n_i."""
    if not len(times):
        raise ValueError('cannot estimate a cumulative hazard from no samples')
    event_times, at_risk, deaths = weighted_tallies(times, events, weights)
    return CumulativeHazard(event_times, np.cumsum(deaths / at_risk))


def _logrank(Y, dL, N, D):
    """Absolute standardized log-rank statistic per row of Y and dL."""
    with np.errstate(divide='ignore', invalid='ignore'):
        share = np.where(N > 0, Y / N, 0.0)
        spread = np.where(N > 1, D * (N - D) / (N - 1.0), 0.0)
    numerator = np.sum(dL - share * D, axis=-1)
    variance = np.sum(share * (1.0 - share) * spread, axis=-1)
    with np.errstate(divide='ignore', invalid='ignore'):
        return np.where(variance > 0, np.abs(numerator) / np.sqrt(variance), 0.0)


def logrank_split_statistic(left, right, left_weights=None, right_weights=None):
    """Return |sum(d_left - e_left)| / sqrt(sum v) over the pooled event times.

    left and right are (times, events) pairs. Zero variance gives 0.
    """
    (lt, le), (rt, re) = left, right
    if not len(lt) or not len(rt):
        raise ValueError('both sides of a split must be non-empty')
    lw = np.ones(len(lt)) if left_weights is None else np.asarray(left_weights, dtype=float)
    rw = np.ones(len(rt)) if right_weights is None else np.asarray(right_weights, dtype=float)
    times = np.concatenate([np.asarray(lt, dtype=float), np.asarray(rt, dtype=float)])
    events = np.concatenate([np.asarray(le, dtype=bool), np.asarray(re, dtype=bool)])
    weights = np.concatenate([lw, rw])
    side = np.concatenate([np.ones(len(lt), dtype=bool), np.zeros(len(rt), dtype=bool)])
    tau = np.unique(times[events])
    if not len(tau):
        return 0.0
    risk = weights[:, None] * (times[:, None] >= tau[None, :])
    death = weights[:, None] * ((times[:, None] == tau[None, :]) & events[:, None])
    return float(_logrank(risk[side].sum(0), death[side].sum(0), risk.sum(0), death.sum(0)))


def _midpoint(low, high):
    middle = (low + high) / 2.0
    return middle if low <= middle < high else low


def _best_split(X, times, events, weights, members, features, options):
    """Return (statistic, feature, threshold) of the best admissible split, or None."""
    node_t, node_e, node_w = times[members], events[members], weights[members]
    tau = np.unique(node_t[node_e])
    if not len(tau):
        return None
    risk = node_w[:, None] * (node_t[:, None] >= tau[None, :])
    death = node_w[:, None] * ((node_t[:, None] == tau[None, :]) & node_e[:, None])
    N, D = risk.sum(0), death.sum(0)
    event_w = node_w * node_e
    total_w, total_e = node_w.sum(), event_w.sum()

    best = None
    for j in sorted(features):
        x = X[members, j]
        order = np.argsort(x, kind='mergesort')
        ordered = x[order]
        cuts = np.nonzero(ordered[1:] > ordered[:-1])[0]
        if not len(cuts):
            continue
        left_w = np.cumsum(node_w[order])[cuts]
        left_e = np.cumsum(event_w[order])[cuts]
        admissible = ((left_w >= options.min_samples_leaf) &
                      (total_w - left_w >= options.min_samples_leaf) &
                      (left_e >= options.min_events_leaf) &
                      (total_e - left_e >= options.min_events_leaf))
        cuts = cuts[admissible]
        if not len(cuts):
            continue
        Y = np.cumsum(risk[order], axis=0)[cuts]
        dL = np.cumsum(death[order], axis=0)[cuts]
        statistic = _logrank(Y, dL, N[None, :], D[None, :])
        k = int(np.argmax(statistic))
        if statistic[k] > 0 and (best is None or statistic[k] > best[0]):
            best = (float(statistic[k]), j, _midpoint(ordered[cuts[k]], ordered[cuts[k] + 1]))
    return best


def _leaf_increments(times, events, weights, members, grid):
    event_times, at_risk, deaths = weighted_tallies(times[members], events[members], weights[members])
    return np.searchsorted(grid, event_times), deaths / at_risk


def _grow_tree(X, times, events, grid, options, seed, index):
    """Grow one tree on a bootstrap of the canonically ordered samples."""
    rng = np.random.default_rng([seed, index])
    n, p = X.shape
    in_bag = np.bincount(rng.integers(0, n, size=n), minlength=n)
    weights = in_bag.astype(float)
    mtry = options.effective_mtry(p)

    feature, threshold, left, right, leaf = [], [], [], [], []
    leaf_ptr, positions, increments, sizes, leaf_events = [0], [], [], [], []

    def new_node():
        for column, value in ((feature, LEAF), (threshold, 0.0), (left, -1), (right, -1), (leaf, -1)):
            column.append(value)
        return len(feature) - 1

    stack = [(new_node(), np.nonzero(in_bag)[0], 0)]
    while stack:
        node, members, depth = stack.pop()
        draws = weights[members].sum()
        split = None
        if (draws >= options.min_samples_split and draws >= 2 * options.min_samples_leaf and
                (options.max_depth is None or depth < options.max_depth)):
            candidates = rng.choice(p, size=mtry, replace=False)
            split = _best_split(X, times, events, weights, members, candidates, options)
        if split is None:
            leaf[node] = len(sizes)
            pos, inc = _leaf_increments(times, events, weights, members, grid)
            positions.extend(pos.tolist())
            increments.extend(inc.tolist())
            leaf_ptr.append(len(positions))
            sizes.append(int(draws))
            leaf_events.append(int(np.sum(weights[members] * events[members])))
            continue
        _, j, cut = split
        go_left = X[members, j] <= cut
        feature[node], threshold[node] = j, cut
        left[node], right[node] = new_node(), new_node()
        # right is pushed first so the left subtree is numbered and grown first
        stack.append((right[node], members[~go_left], depth + 1))
        stack.append((left[node], members[go_left], depth + 1))

    return SurvivalTree(feature, threshold, left, right, leaf, leaf_ptr, positions,
                        increments, sizes, leaf_events, in_bag)


def rsf_fit(d, options=None):
    """Return a SurvivalForest grown on d.

    Samples are put in identifier order before bootstrapping and tree i
    draws from its own stream seeded with (seed, i), so the forest does not
    depend on input order or on n_jobs.
    """
    options = options or RsfOptions()
    if d.p < 1:
        raise DataError('the forest needs at least one feature')
    if not np.any(d.events):
        raise DataError('the forest needs at least one event')
    order = d.canonical_order()
    X = np.ascontiguousarray(d.X[order])
    times = np.asarray(d.times)[order]
    events = np.asarray(d.events, dtype=bool)[order]
    grid = np.unique(times[events])
    if len(grid) < 2:
        raise DataError('the forest needs at least 2 distinct event times, got {}'.format(len(grid)))
    options.effective_mtry(d.p)

    LOG.info('Growing {} trees on {} samples, {} features, {} job(s)'.format(
        options.n_trees, d.n, d.p, options.n_jobs))
    trees = Parallel(n_jobs=options.n_jobs)(
        delayed(_grow_tree)(X, times, events, grid, options, options.seed, index)
        for index in range(options.n_trees))
    saved = options.to_dict()
    for name in RUNTIME_OPTIONS:
        saved.pop(name, None)
    sample_ids = [d.sample_ids[i] for i in order]
    return SurvivalForest(d.feature_names, grid, trees, saved, sample_ids)


def rsf_predict_chf(f, x):
    """Return the ensemble cumulative hazard of one covariate vector."""
    X, single = f.check_covariates(x)
    if not single:
        raise ValueError('rsf_predict_chf expects one covariate vector')
    return CumulativeHazard(f.time_grid, f.hazard_matrix(X)[0])


def rsf_predict_survival(f, x):
    """Return exp(-H) of the ensemble cumulative hazard."""
    return chf_to_survival(rsf_predict_chf(f, x))


def rsf_risk_score(f, x):
    """Return the summed ensemble hazard over the grid (one value, or one per row)."""
    X, single = f.check_covariates(x)
    scores = f.hazard_matrix(X).sum(axis=1)
    return float(scores[0]) if single else scores


def oob_risk_scores(f, d):
    """Return (risk scores, mask) using only trees where each sample was out of bag."""
    X, _ = f.check_covariates(d.X)
    position = dict((sample_id, k) for k, sample_id in enumerate(f.sample_ids))
    unknown = [x for x in d.sample_ids if x not in position]
    if unknown:
        raise DataError('{} sample(s) were not used to train the forest, e.g. {}'.format(
            len(unknown), unknown[0]))
    index = np.array([position[x] for x in d.sample_ids], dtype=np.int64)
    grid_size = len(f.time_grid)
    totals = np.zeros(d.n)
    counts = np.zeros(d.n)
    for tree in f.trees:
        out = np.nonzero(tree.in_bag[index] == 0)[0]
        if not len(out):
            continue
        hazards = tree.leaf_hazards(grid_size)[tree.apply(X[out])]
        totals[out] += hazards.sum(axis=1)
        counts[out] += 1
    mask = counts > 0
    scores = np.zeros(d.n)
    scores[mask] = totals[mask] / counts[mask]
    return scores, mask


def rsf_oob_cindex(f, d):
    """Return the concordance index of out-of-bag risk scores on the training data."""
    scores, mask = oob_risk_scores(f, d)
    if not mask.any():
        raise DataError('no sample is out of bag for any tree')
    if not mask.all():
        LOG.warning('{} sample(s) are in bag for every tree and are excluded from the OOB score'.format(
            int((~mask).sum())))
    result = concordance_index(np.asarray(d.times)[mask], np.asarray(d.events)[mask], scores[mask])
    LOG.info('OOB concordance {:.4f} over {} samples'.format(result.c_index, int(mask.sum())))
    return result.c_index
