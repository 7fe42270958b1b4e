"""The 21 behavioral features computed from one parsed email.

Subject features (1-6) look at whitespace tokens of the subject line,
header features (7-8) at priority and content type, body features (9-21)
at the raw body text with HTML markup intact. Body substring matching is
case-insensitive except feature 12, which checks verbatim "From:"/"To:".

 1. subject has a run of 3+ identical consecutive characters
 2. subject tokens whose letters are all uppercase (at least one letter)
 3. subject tokens of length >= 15
 4. subject tokens with >= 2 occurrences of j/k/q/x/z
 5. subject tokens with letters but no vowels
 6. subject tokens with a non-letter, non-apostrophe char before the last position
 7. priority header present and not normal/medium
 8. content type absent or text/html
 9. proportion of alphabetic body words with no vowels and length >= 7
10. proportion of alphabetic body words with >= 2 occurrences of j/k/q/x/z
11. proportion of alphabetic body words of length >= 15
12. body contains both "From:" and "To:"
13. count of "<!--"
14. count of "href="
15. count of "<img" inside <a>...</a> regions
16. a text color is set to white
17. count of href= values containing a digit or &, %, @
18. count of color declarations and color-bearing attributes
19. body contains "<script" or "javascript:"
20. body contains "<style", "style=" or a stylesheet link
21. body contains "<table"
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass

from .errors import InvalidSubset
from .parser import ParsedEmail, is_alphabetic_word, tokenize

FEATURE_COUNT = 21
FEATURE_NAMES: tuple[str, ...] = tuple(f"f{i}" for i in range(1, FEATURE_COUNT + 1))
PROPORTION_NAMES = frozenset({"f9", "f10", "f11"})

_RARE = frozenset("jkqxz")
_VOWELS = frozenset("aeiou")

# Heads of a text-color assignment. bgcolor is deliberately absent here:
# it paints the background, not the text. The lookbehind stops matches
# inside longer names such as bgcolor= or background-color:.
_WHITE_HEAD = re.compile(r"(?<![a-z0-9-])(?:(?:color|text)\s*=|color\s*:)")
_WHITE_VALUES = frozenset({"white", "#fff", "#ffffff", "rgb(255,255,255)"})

# All color-bearing constructs, CSS declarations and HTML attributes.
_COLOR_CSS = re.compile(r"(?<![a-z0-9-])(?:background-color|bgcolor|color)\s*:")
_COLOR_ATTR = re.compile(r"(?<![a-z0-9-])(?:bgcolor|color|text|vlink|alink|link)\s*=")

# "<a" opens an anchor only when not the prefix of a longer tag name.
_ANCHOR_OPEN = re.compile(r"<a(?![a-z0-9-])")
_STYLESHEET_LINK = re.compile(r"rel\s*=\s*['\"]?stylesheet")


class FeatureCategory(enum.Enum):
    SUBJECT = 1
    HEADERS = 2
    BODY = 3


def category_indices(category: FeatureCategory) -> list[int]:
    """1-based feature indices belonging to the category."""
    if category is FeatureCategory.SUBJECT:
        return list(range(1, 7))
    if category is FeatureCategory.HEADERS:
        return [7, 8]
    return list(range(9, 22))


@dataclass(frozen=True)
class FeatureVector:
    """Numeric feature values plus an optional class label."""

    values: tuple[float, ...]
    label: str | None = None
    source_id: str = ""


def _is_letter(c: str) -> bool:
    return "A" <= c <= "Z" or "a" <= c <= "z"


def _has_repeat_run(text: str, run: int = 3) -> bool:
    for i in range(len(text) - run + 1):
        if all(text[i + j] == text[i] for j in range(1, run)):
            return True
    return False


def _rare_count(token: str) -> int:
    return sum(1 for c in token.lower() if c in _RARE)


def _letters(token: str) -> list[str]:
    return [c for c in token if _is_letter(c)]


def _has_vowel(token: str) -> bool:
    return any(c in _VOWELS for c in token.lower())


def _mid_special(token: str) -> bool:
    # A single trailing punctuation mark is allowed; anything disallowed
    # earlier in the token is not.
    return any(not (_is_letter(c) or c == "'") for c in token[:-1])


def _attr_or_css_value(body: str, pos: int, css: bool) -> str:
    """Raw value text starting at pos (after the '=' or ':')."""
    n = len(body)
    i = pos
    while i < n and body[i] in " \t\r\n":
        i += 1
    quote = ""
    if i < n and body[i] in "'\"":
        quote = body[i]
        i += 1
    start = i
    if quote:
        end = body.find(quote, i)
        if end < 0:
            end = n
    else:
        stop = ";}<>'\"" if css else " \t\r\n<>"
        end = i
        while end < n and body[end] not in stop:
            end += 1
    return body[start:end]


def _normalize_color(value: str) -> str:
    return re.sub(r"[\s'\"]+", "", value)


def _has_white_text(body_l: str) -> bool:
    for m in _WHITE_HEAD.finditer(body_l):
        css = body_l[m.end() - 1] == ":"
        value = _attr_or_css_value(body_l, m.end(), css)
        if _normalize_color(value) in _WHITE_VALUES:
            return True
    return False


def _imgs_inside_anchors(body_l: str) -> int:
    events: list[tuple[int, str]] = []
    for m in _ANCHOR_OPEN.finditer(body_l):
        events.append((m.start(), "open"))
    pos = body_l.find("</a>")
    while pos >= 0:
        events.append((pos, "close"))
        pos = body_l.find("</a>", pos + 1)
    pos = body_l.find("<img")
    while pos >= 0:
        events.append((pos, "img"))
        pos = body_l.find("<img", pos + 1)
    events.sort()
    # Linear, non-nesting: an unmatched open extends to the end of the body.
    inside = False
    count = 0
    for _, kind in events:
        if kind == "open":
            inside = True
        elif kind == "close":
            inside = False
        elif inside:
            count += 1
    return count


def _suspicious_hrefs(body_l: str) -> int:
    count = 0
    pos = body_l.find("href=")
    while pos >= 0:
        value = _attr_or_css_value(body_l, pos + 5, css=False)
        if any("0" <= c <= "9" or c in "&%@" for c in value):
            count += 1
        pos = body_l.find("href=", pos + 1)
    return count


def _priority_is_elevated(priority_raw: str | None) -> bool:
    if priority_raw is None:
        return False
    value = priority_raw.strip()
    lowered = value.lower()
    normal = value == "3" or "normal" in lowered or "medium" in lowered
    return not normal


def extract(email: ParsedEmail) -> FeatureVector:
    """Compute all 21 features; degenerate inputs yield zeros, never errors."""
    subject_tokens = tokenize(email.subject)
    body_tokens = tokenize(email.body)
    words = [t for t in body_tokens if is_alphabetic_word(t)]
    body = email.body
    body_l = body.lower()

    def proportion(count: int) -> float:
        return count / len(words) if words else 0.0

    f1 = 1 if _has_repeat_run(email.subject) else 0
    f2 = sum(
        1
        for t in subject_tokens
        if (ltrs := _letters(t)) and all("A" <= c <= "Z" for c in ltrs)
    )
    f3 = sum(1 for t in subject_tokens if len(t) >= 15)
    f4 = sum(1 for t in subject_tokens if _rare_count(t) >= 2)
    f5 = sum(1 for t in subject_tokens if _letters(t) and not _has_vowel(t))
    f6 = sum(1 for t in subject_tokens if _mid_special(t))

    f7 = 1 if _priority_is_elevated(email.priority_raw) else 0
    f8 = 1 if email.content_type_raw is None or email.content_type_raw == "text/html" else 0

    f9 = proportion(sum(1 for w in words if len(w) >= 7 and not _has_vowel(w)))
    f10 = proportion(sum(1 for w in words if _rare_count(w) >= 2))
    f11 = proportion(sum(1 for w in words if len(w) >= 15))

    f12 = 1 if "From:" in body and "To:" in body else 0
    f13 = body_l.count("<!--")
    f14 = body_l.count("href=")
    f15 = _imgs_inside_anchors(body_l)
    f16 = 1 if _has_white_text(body_l) else 0
    f17 = _suspicious_hrefs(body_l)
    f18 = len(_COLOR_CSS.findall(body_l)) + len(_COLOR_ATTR.findall(body_l))
    f19 = 1 if "<script" in body_l or "javascript:" in body_l else 0
    f20 = (
        1
        if "<style" in body_l
        or "style=" in body_l
        or _STYLESHEET_LINK.search(body_l) is not None
        else 0
    )
    f21 = 1 if "<table" in body_l else 0

    values = (
        f1, f2, f3, f4, f5, f6, f7, f8,
        f9, f10, f11,
        f12, f13, f14, f15, f16, f17, f18, f19, f20, f21,
    )
    return FeatureVector(
        values=tuple(float(v) for v in values),
        label=None,
        source_id=email.source_id,
    )


def validate_subset(subset: list[int], n_features: int) -> None:
    """Reject empty, duplicate, or out-of-range 1-based indices."""
    if not subset:
        raise InvalidSubset("feature subset is empty")
    seen: set[int] = set()
    for i in subset:
        if not isinstance(i, int) or i < 1 or i > n_features:
            raise InvalidSubset(f"feature index {i!r} outside 1..{n_features}")
        if i in seen:
            raise InvalidSubset(f"duplicate feature index {i}")
        seen.add(i)


def project(vector: FeatureVector, subset: list[int]) -> FeatureVector:
    """Restrict a vector to the given 1-based indices, in subset order."""
    validate_subset(subset, len(vector.values))
    return FeatureVector(
        values=tuple(vector.values[i - 1] for i in subset),
        label=vector.label,
        source_id=vector.source_id,
    )
