"""Pure-Python text kernels.

Fallback used when the compiled rack._speedups extension is unavailable.
Both backends must stay observationally identical; tests/test_kernels.py
cross-checks them on fixed vectors and randomized inputs.
"""

from __future__ import annotations

import re

_CAMEL_RE = re.compile(r"[A-Z]+[0-9]*(?![a-z])|[A-Z]?[a-z]+[0-9]*|[0-9]+")
_IDENT_RE = re.compile(r"[A-Za-z_$][A-Za-z0-9_$]*")

# Order matters: a match starting earlier wins, so a quote opening a string
# swallows any // or /* inside it, and vice versa. Unterminated block
# comments and string literals run to end of input / end of line.
_NOISE_RE = re.compile(
    r"//[^\n]*"
    r"|/\*.*?(?:\*/|\Z)"
    r"|'(?:\\.|[^'\\\n])*'?"
    r"|\"(?:\\.|[^\"\\\n])*\"?",
    re.S,
)


def split_subtokens(text: str) -> list[str]:
    """Split text into lower-cased word tokens.

    Non-alphanumeric characters delimit tokens; camel-case humps and
    acronym/digit runs split further: "parseHtmlPage" -> [parse, html, page],
    "SHA256" -> [sha256], "HTMLParser" -> [html, parser].
    """
    return [m.group().lower() for m in _CAMEL_RE.finditer(text)]


def find_identifiers(text: str) -> list[str]:
    """Return maximal identifier-shaped runs, in order of appearance."""
    return _IDENT_RE.findall(text)


def neutralize_java(text: str) -> str:
    """Blank out comments, string literals, and char literals.

    Every blanked character becomes a space except newlines, so offsets and
    line numbers are preserved for brace scanning.
    """
    out = []
    last = 0
    for m in _NOISE_RE.finditer(text):
        out.append(text[last : m.start()])
        out.append("".join("\n" if c == "\n" else " " for c in m.group()))
        last = m.end()
    out.append(text[last:])
    return "".join(out)


# --- Porter stemmer (original 1980 algorithm) ---

_VOWELS = "aeiou"


def _is_consonant(word: str, i: int) -> bool:
    c = word[i]
    if c in _VOWELS:
        return False
    if c == "y":
        return i == 0 or not _is_consonant(word, i - 1)
    return True


def _measure(stem: str) -> int:
    # number of vowel->consonant transitions: [C](VC)^m[V]
    m = 0
    prev_vowel = False
    for i in range(len(stem)):
        cons = _is_consonant(stem, i)
        if prev_vowel and cons:
            m += 1
        prev_vowel = not cons
    return m


def _has_vowel(stem: str) -> bool:
    return any(not _is_consonant(stem, i) for i in range(len(stem)))


def _ends_double_consonant(word: str) -> bool:
    return (
        len(word) >= 2
        and word[-1] == word[-2]
        and _is_consonant(word, len(word) - 1)
    )


def _ends_cvc(word: str) -> bool:
    if len(word) < 3:
        return False
    return (
        _is_consonant(word, len(word) - 3)
        and not _is_consonant(word, len(word) - 2)
        and _is_consonant(word, len(word) - 1)
        and word[-1] not in "wxy"
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


def _longest_suffix_rule(word, rules):
    best = None
    for suf, rep in rules:
        if word.endswith(suf) and (best is None or len(suf) > len(best[0])):
            best = (suf, rep)
    return best


def porter_stem(word: str) -> str:
    """Stem a lower-case word with the classic Porter algorithm.

    Within each step only the longest matching suffix is considered; if its
    measure condition fails, the step changes nothing. Words shorter than
    three characters or containing non-letters pass through untouched.
    """
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
            if w.endswith(("at", "bl", "iz")):
                w += "e"
            elif _ends_double_consonant(w) and w[-1] not in "lsz":
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
        if _measure(stem) > 1 and (best != "ion" or (stem and stem[-1] in "st")):
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
