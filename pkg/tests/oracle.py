"""Independent straight-line re-implementations used as test oracles.

Everything here works directly from raw edge-count dictionaries and plain
lists, deliberately sharing no code with the package under test.
"""

import math


def oracle_row(counts, state):
    """Sorted (label, probability) successors of state from a raw count dict."""
    succ = {d: c for (s, d), c in counts.items() if s == state}
    total = sum(succ.values())
    if total == 0:
        return []
    entries = [(d, c / total) for d, c in succ.items()]
    entries.sort(key=lambda e: (-e[1], e[0]))
    return entries


def oracle_entropy(probs):
    return -sum(p * math.log(p) for p in probs if p > 0.0)


def oracle_assess(counts, state, observed, use_certainty=True, literal=False):
    """Straight-line per-transition anomaly score with the documented conventions."""
    row = oracle_row(counts, state)
    if not row:
        return 1.0  # unknown / absorbing state
    labels = [lbl for lbl, _ in row]
    if observed not in labels:
        return 1.0  # transition never seen in training
    r = labels.index(observed) + 1
    p = row[labels.index(observed)][1]
    max_p = row[0][1]
    h = oracle_entropy([q for _, q in row])

    if r == 1:
        factor_rank = 0.0
    else:
        factor_rank = math.log(r) / math.log(len(row))

    if literal:
        factor_prob = 1.0 + p / max_p
    else:
        factor_prob = min(1.0, max(0.0, 1.0 - p / max_p))

    if use_certainty:
        if h <= 0.0:
            c = 1.0
        else:
            surprisal = 0.0 if p <= 0.0 or p >= 1.0 else -p * math.log(p)
            c = 1.0 - surprisal / h
    else:
        c = 1.0

    return factor_rank * factor_prob * c


def oracle_guidance(counts, state, prediction_labels, dictionary):
    """Brute-force rank-sum argmin; returns ('recommend', label) or ('repeat', g_valid)."""
    row = oracle_row(counts, state)
    row_labels = [lbl for lbl, _ in row]
    g_valid = [lbl for lbl in row_labels if lbl in dictionary]
    best = None
    for lbl in g_valid:
        if lbl not in prediction_labels or lbl not in dictionary:
            continue
        rank_g = row_labels.index(lbl) + 1
        rank_p = prediction_labels.index(lbl) + 1
        key = (rank_g + rank_p, rank_g, lbl)
        if best is None or key < best:
            best = key
    if best is None:
        return ("repeat", g_valid)
    return ("recommend", best[2])


def oracle_step_twsa(t_ref, t_actual, correct):
    if not correct:
        return 0.0
    return min(t_ref / t_actual, 1.0)
