"""Pure-Python reduction kernel for prime-field coefficients.

Words arrive already encoded in the engine alphabet ("a" < "b"), so the
admissible order is plain (len, str) comparison.  Rules are
``(lead, ((word, coeff), ...))`` with every tail word strictly smaller
than the lead, which guarantees termination.

This is the hot inner loop of the whole package; :mod:`._fastreduce` is
the compiled twin with the same contract.
"""

from __future__ import annotations

BACKEND = "python"


def reduce_terms(terms, rules, p):
    """Reduce a term dict {word: coeff} modulo the rules, coefficients
    in F_p.  Deterministic: always rewrites the largest reducible word,
    at its leftmost reducible position, by the first matching rule.
    """
    work = dict(terms)
    result = {}
    while work:
        w = max(work, key=_key)
        c = work.pop(w)
        best_pos = -1
        best_rule = None
        for lead, tail in rules:
            pos = w.find(lead)
            if pos != -1 and (best_pos == -1 or pos < best_pos):
                best_pos = pos
                best_rule = (lead, tail)
                if pos == 0:
                    break
        if best_rule is None:
            prev = result.get(w, 0)
            s = (prev + c) % p
            if s:
                result[w] = s
            elif w in result:
                del result[w]
            continue
        lead, tail = best_rule
        prefix = w[:best_pos]
        suffix = w[best_pos + len(lead):]
        for tw, tc in tail:
            nw = prefix + tw + suffix
            s = (work.get(nw, 0) + c * tc) % p
            if s:
                work[nw] = s
            elif nw in work:
                del work[nw]
    return result


def _key(w):
    return (len(w), w)
