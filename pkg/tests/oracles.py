"""Independent brute-force oracles used to cross-check the library.

Everything here recomputes results from first principles (plain slicing and
full enumeration), deliberately ignoring the library's shortcuts.
"""

from repcore import DeletionSplit, InterruptSpec, build
from repcore.errors import InvalidSpec, InvalidSplit


def lcp_naive(a, b):
    i = 0
    for ca, cb in zip(a, b):
        if ca != cb:
            break
        i += 1
    return i


def lcs_naive(a, b):
    return lcp_naive(a[::-1], b[::-1])


def smallest_period_naive(w):
    for p in range(1, len(w) + 1):
        if all(w[i] == w[i + p] for i in range(len(w) - p)):
            return p
    raise AssertionError


def is_primitive_naive(w):
    n = len(w)
    return not any(n % p == 0 and w[:p] * (n // p) == w for p in range(1, n))


def core_by_definition(x, cut, e1, e2):
    """Prefix-form core evaluated verbatim: p-tilde from x1x2, s-tilde from x2x1.

    Returns (p_len, s_len, p_tilde, s_tilde, core).
    """
    x1, x2 = x[:cut], x[cut:]
    a, b = x1 + x2, x2 + x1
    p = lcp_naive(a, b)
    s = lcs_naive(a, b)
    return p, s, a[: p + 1], b[len(b) - s - 1 :], b[len(b) - s - 1 :] + a[: p + 1]


def core_by_continuation(spec):
    """General-form core recovered from the built word itself.

    Scans W forward from the junction against the expected continuation
    (the periodic extension of the left part) and backward against the
    actual continuation's phase, then cuts the core out of W.

    Returns (p_len, s_len, core, core_start, core_end, junction).
    """
    split = spec.split
    x, n = split.x, len(split.x)
    w = build(spec)
    junction = spec.e1 * n + split.cut1

    p = 0
    while w[junction + p] == x[(junction + p) % n]:
        p += 1

    v = x[split.cut2 :] + x[: split.cut2]
    s = 0
    while w[junction - 1 - s] == v[(n - 1 - s) % n]:
        s += 1

    return p, s, w[junction - s - 1 : junction + p + 1], junction - s - 1, junction + p + 1, junction


def parses_bruteforce(word, forms="both", min_e_sum=3):
    """All spec tuples rebuilding the word, by dumb enumeration.

    Since W = x^e1 x1 x3 x^e2 with e1 >= 1, x must be a prefix of the word;
    beyond that, every (cut1, cut2, e1) combination is tried and checked by
    rebuilding the full string.
    """
    total = len(word)
    out = []
    for n in range(1, total + 1):
        x = word[:n]
        for cut1 in range(n + 1):
            for cut2 in range(cut1 + 1, n + 1):
                if forms == "prefix" and cut2 != n:
                    continue
                if forms == "deletion" and cut2 == n:
                    continue
                body = total - cut1 - (n - cut2)
                if body < 0 or body % n:
                    continue
                e_sum = body // n
                if e_sum < min_e_sum:
                    continue
                for e1 in range(1, e_sum):
                    try:
                        spec = InterruptSpec(
                            DeletionSplit(x, cut1, cut2), e1, e_sum - e1
                        )
                    except (InvalidSplit, InvalidSpec):
                        continue
                    if build(spec) == word:
                        out.append(spec)
    return out
