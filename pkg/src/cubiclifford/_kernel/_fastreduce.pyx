# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled twin of pyreduce.reduce_terms (same contract, same output)."""

BACKEND = "cython"


def reduce_terms(terms, rules, long p):
    cdef dict work = dict(terms)
    cdef dict result = {}
    cdef long c, tc, s, prev
    cdef Py_ssize_t pos, best_pos, nrules, i
    cdef str w, lead, prefix, suffix, nw, tw
    cdef tuple rule, best_rule, tail

    nrules = len(rules)
    while work:
        w = max(work)
        # plain max() agrees with (len, str) only within one length; scan
        # explicitly for the graded max instead
        for nw in work:
            if len(nw) > len(w) or (len(nw) == len(w) and nw > w):
                w = nw
        c = work.pop(w)
        best_pos = -1
        best_rule = None
        for i in range(nrules):
            rule = rules[i]
            lead = rule[0]
            pos = w.find(lead)
            if pos != -1 and (best_pos == -1 or pos < best_pos):
                best_pos = pos
                best_rule = rule
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
        lead = best_rule[0]
        tail = best_rule[1]
        prefix = w[:best_pos]
        suffix = w[best_pos + len(lead):]
        for term in tail:
            tw = term[0]
            tc = term[1]
            nw = prefix + tw + suffix
            s = (work.get(nw, 0) + c * tc) % p
            if s:
                work[nw] = s
            elif nw in work:
                del work[nw]
    return result
