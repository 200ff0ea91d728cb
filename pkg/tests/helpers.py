"""Shared oracles for the test suite.

Everything here is computed independently of the library's own lattice
machinery wherever that is meaningful: words come straight from bit
masks, covers from a no-intermediate check over the full order matrix,
ranks from breadth-first search over those covers.  Only Word.values is
trusted (it is itself pinned against hand examples in test_core).
"""

from marklat.core import Word

SEED = 1729


def all_words(params):
    """Every word of the lattice, one per subset mask, mask order."""
    return [Word(params, m) for m in range(1 << params.n)]


def leq_table(params):
    """up[i] and down[i] as integer bitsets over mask-indexed words.

    Bit k of up[i] says word k lies above word i (reflexively).
    """
    words = all_words(params)
    count = len(words)
    vals = [w.values for w in words]
    up = [0] * count
    down = [0] * count
    for i in range(count):
        vi = vals[i]
        for k in range(count):
            vk = vals[k]
            if all(a <= b for a, b in zip(vi, vk)):
                up[i] |= 1 << k
                down[k] |= 1 << i
    return words, up, down


def brute_cover_pairs(params):
    """All cover pairs (lower, upper) by the definition: strictly below
    with no third word strictly between."""
    words, up, down = leq_table(params)
    pairs = set()
    for i, wi in enumerate(words):
        for k, wk in enumerate(words):
            if i != k and up[i] >> k & 1:
                between = up[i] & down[k]
                if between == (1 << i) | (1 << k):
                    pairs.add((wi, wk))
    return pairs


def bfs_ranks(params):
    """Rank of every word as shortest cover-chain distance from the bottom."""
    words, up, down = leq_table(params)
    covers = brute_cover_pairs(params)
    index = {w: i for i, w in enumerate(words)}
    outgoing = {i: [] for i in range(len(words))}
    for lo, hi in covers:
        outgoing[index[lo]].append(index[hi])
    # the bottom is below everything, i.e. its up-set is the whole lattice
    bottom = max(range(len(words)), key=lambda i: up[i].bit_count())
    dist = {bottom: 0}
    frontier = [bottom]
    while frontier:
        nxt = []
        for i in frontier:
            for k in outgoing[i]:
                if k not in dist:
                    dist[k] = dist[i] + 1
                    nxt.append(k)
        frontier = nxt
    return {words[i]: d for i, d in dist.items()}


def poly_mul(a, b):
    """Coefficient-list product, lowest degree first."""
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out
