# cython: language_level=3
# cython: boundscheck=False
# cython: wraparound=False
"""Compiled text kernels.

Mirrors rack._native exactly; the pure module is the reference if the two
ever disagree. Scanning is done with typed per-character loops instead of
the regex engine.
"""

import cython


cdef inline bint _is_upper(Py_UCS4 c):
    return c >= 'A' and c <= 'Z'


cdef inline bint _is_lower(Py_UCS4 c):
    return c >= 'a' and c <= 'z'


cdef inline bint _is_digit(Py_UCS4 c):
    return c >= '0' and c <= '9'


cdef inline bint _is_ident_start(Py_UCS4 c):
    return _is_upper(c) or _is_lower(c) or c == '_' or c == '$'


cdef inline bint _is_ident_part(Py_UCS4 c):
    return _is_ident_start(c) or _is_digit(c)


def split_subtokens(str text):
    """Split text into lower-cased word tokens (camel humps, acronym and
    digit runs split out), identical to the regex in rack._native."""
    cdef Py_ssize_t i = 0, n = len(text), u, d
    tokens = []
    while i < n:
        c = text[i]
        if _is_upper(c):
            u = i + 1
            while u < n and _is_upper(text[u]):
                u += 1
            if u - i >= 2 and u < n and _is_lower(text[u]):
                # acronym run: last upper starts the following word
                tokens.append(text[i : u - 1].lower())
                i = u - 1
            elif u < n and _is_lower(text[u]):
                # single upper + word + trailing digits
                d = u
                while d < n and _is_lower(text[d]):
                    d += 1
                while d < n and _is_digit(text[d]):
                    d += 1
                tokens.append(text[i:d].lower())
                i = d
            else:
                # upper run + digits; a following word steals one digit back
                d = u
                while d < n and _is_digit(text[d]):
                    d += 1
                if d > u and d < n and _is_lower(text[d]):
                    tokens.append(text[i : d - 1].lower())
                    i = d - 1
                else:
                    tokens.append(text[i:d].lower())
                    i = d
        elif _is_lower(c):
            d = i + 1
            while d < n and _is_lower(text[d]):
                d += 1
            while d < n and _is_digit(text[d]):
                d += 1
            tokens.append(text[i:d].lower())
            i = d
        elif _is_digit(c):
            d = i + 1
            while d < n and _is_digit(text[d]):
                d += 1
            tokens.append(text[i:d])
            i = d
        else:
            i += 1
    return tokens


def find_identifiers(str text):
    """Return maximal identifier-shaped runs, in order of appearance."""
    cdef Py_ssize_t i = 0, n = len(text), j
    out = []
    while i < n:
        if _is_ident_start(text[i]):
            j = i + 1
            while j < n and _is_ident_part(text[j]):
                j += 1
            out.append(text[i:j])
            i = j
        else:
            i += 1
    return out


def neutralize_java(str text):
    """Blank comments and string/char literals with spaces, keeping newlines."""
    cdef Py_ssize_t i = 0, n = len(text), start
    cdef Py_UCS4 c, quote
    parts = []
    cdef Py_ssize_t keep_from = 0
    while i < n:
        c = text[i]
        if c == '/' and i + 1 < n and text[i + 1] == '/':
            start = i
            i += 2
            while i < n and text[i] != '\n':
                i += 1
            parts.append(text[keep_from:start])
            parts.append(' ' * (i - start))
            keep_from = i
        elif c == '/' and i + 1 < n and text[i + 1] == '*':
            start = i
            i += 2
            while i < n and not (text[i] == '*' and i + 1 < n and text[i + 1] == '/'):
                i += 1
            if i < n:
                i += 2
            parts.append(text[keep_from:start])
            parts.append(_blank(text, start, i))
            keep_from = i
        elif c == '"' or c == "'":
            quote = c
            start = i
            i += 1
            while i < n:
                c = text[i]
                if c == '\\':
                    if i + 1 >= n:
                        break  # lone trailing backslash stays outside the literal
                    i += 2
                    continue
                if c == quote:
                    i += 1
                    break
                if c == '\n':
                    break
                i += 1
            parts.append(text[keep_from:start])
            parts.append(_blank(text, start, i))
            keep_from = i
        else:
            i += 1
    parts.append(text[keep_from:])
    return "".join(parts)


cdef str _blank(str text, Py_ssize_t start, Py_ssize_t end):
    cdef Py_ssize_t i
    chars = []
    for i in range(start, end):
        chars.append('\n' if text[i] == '\n' else ' ')
    return "".join(chars)


# --- Porter stemmer (original 1980 algorithm) ---

cdef inline bint _is_vowel_char(Py_UCS4 c):
    return c == 'a' or c == 'e' or c == 'i' or c == 'o' or c == 'u'


cdef bint _is_consonant(str word, Py_ssize_t i):
    cdef Py_UCS4 c = word[i]
    if _is_vowel_char(c):
        return False
    if c == 'y':
        return i == 0 or not _is_consonant(word, i - 1)
    return True


cdef int _measure(str stem):
    cdef int m = 0
    cdef bint prev_vowel = False, cons
    cdef Py_ssize_t i
    for i in range(len(stem)):
        cons = _is_consonant(stem, i)
        if prev_vowel and cons:
            m += 1
        prev_vowel = not cons
    return m


cdef bint _has_vowel(str stem):
    cdef Py_ssize_t i
    for i in range(len(stem)):
        if not _is_consonant(stem, i):
            return True
    return False


cdef bint _ends_double_consonant(str word):
    cdef Py_ssize_t n = len(word)
    return n >= 2 and word[n - 1] == word[n - 2] and _is_consonant(word, n - 1)


cdef bint _ends_cvc(str word):
    cdef Py_ssize_t n = len(word)
    if n < 3:
        return False
    return (
        _is_consonant(word, n - 3)
        and not _is_consonant(word, n - 2)
        and _is_consonant(word, n - 1)
        and word[n - 1] != 'w'
        and word[n - 1] != 'x'
        and word[n - 1] != 'y'
    )


_STEP2 = (
    ("ational", "ate"), ("tional", "tion"), ("enci", "ence"), ("anci", "ance"),
    ("izer", "ize"), ("abli", "able"), ("alli", "al"), ("entli", "ent"),
    ("eli", "e"), ("ousli", "ous"), ("ization", "ize"), ("ation", "ate"),
    ("ator", "ate"), ("alism", "al"), ("iveness", "ive"), ("fulness", "ful"),
    ("ousness", "ous"), ("aliti", "al"), ("iviti", "ive"), ("biliti", "ble"),
)

_STEP3 = (
    ("icate", "ic"), ("ative", ""), ("alize", "al"), ("iciti", "ic"),
    ("ical", "ic"), ("ful", ""), ("ness", ""),
)

_STEP4 = (
    "al", "ance", "ence", "er", "ic", "able", "ible", "ant", "ement",
    "ment", "ent", "ion", "ou", "ism", "ate", "iti", "ous", "ive", "ize",
)


cdef _longest_suffix_rule(str word, tuple rules):
    best = None
    for suf, rep in rules:
        if word.endswith(suf) and (best is None or len(suf) > len(best[0])):
            best = (suf, rep)
    return best


def porter_stem(str word):
    """Stem a lower-case word with the classic Porter algorithm."""
    cdef int m
    if len(word) <= 2 or not word.isalpha():
        return word
    w = word

    # step 1a
    if w.endswith("sses"):
        w = w[:-2]
    elif w.endswith("ies"):
        w = w[:-2]
    elif w.endswith("ss"):
        pass
    elif w.endswith("s"):
        w = w[:-1]

    # step 1b
    if w.endswith("eed"):
        if _measure(w[:-3]) > 0:
            w = w[:-1]
    else:
        stripped = False
        if w.endswith("ed") and _has_vowel(w[:-2]):
            w = w[:-2]
            stripped = True
        elif w.endswith("ing") and _has_vowel(w[:-3]):
            w = w[:-3]
            stripped = True
        if stripped:
            if w.endswith("at") or w.endswith("bl") or w.endswith("iz"):
                w += "e"
            elif _ends_double_consonant(w) and w[-1] != 'l' and w[-1] != 's' and w[-1] != 'z':
                w = w[:-1]
            elif _measure(w) == 1 and _ends_cvc(w):
                w += "e"

    # step 1c
    if w.endswith("y") and _has_vowel(w[:-1]):
        w = w[:-1] + "i"

    # step 2
    rule = _longest_suffix_rule(w, _STEP2)
    if rule is not None:
        stem = w[: len(w) - len(rule[0])]
        if _measure(stem) > 0:
            w = stem + rule[1]

    # step 3
    rule = _longest_suffix_rule(w, _STEP3)
    if rule is not None:
        stem = w[: len(w) - len(rule[0])]
        if _measure(stem) > 0:
            w = stem + rule[1]

    # step 4
    best = None
    for suf in _STEP4:
        if w.endswith(suf) and (best is None or len(suf) > len(best)):
            best = suf
    if best is not None:
        stem = w[: len(w) - len(best)]
        if _measure(stem) > 1 and (best != "ion" or (len(stem) > 0 and (stem[-1] == 's' or stem[-1] == 't'))):
            w = stem

    # step 5a
    if w.endswith("e"):
        stem = w[:-1]
        m = _measure(stem)
        if m > 1 or (m == 1 and not _ends_cvc(stem)):
            w = stem

    # step 5b
    if w.endswith("ll") and _measure(w) > 1:
        w = w[:-1]

    return w
