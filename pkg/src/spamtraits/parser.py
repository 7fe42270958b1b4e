"""Raw email parsing and the token primitives used by feature extraction.

Messages are treated as plain text. MIME parts are not decoded and HTML is
left in the body on purpose: markup is feature material downstream.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .errors import MalformedMessage

_WS_RUN = re.compile(r"[ \t\r\n]+")
_ALPHABETIC = re.compile(r"[A-Za-z']+")

# Conventional carriers of a sender-set priority, in preference order.
_PRIORITY_HEADERS = ("x-priority", "priority", "importance")


@dataclass(frozen=True)
class RawEmail:
    """One undecoded message plus an identifier for reports."""

    data: bytes
    source_id: str


@dataclass(frozen=True)
class ParsedEmail:
    """Header fields of interest plus the verbatim body text."""

    subject: str
    priority_raw: str | None
    content_type_raw: str | None
    body: str
    header_names: tuple[str, ...]
    source_id: str = ""
    # Unfolded physical lines of the header section, kept so the logical
    # message can be reassembled in tests.
    header_lines: tuple[str, ...] = field(default=(), repr=False)


def tokenize(text: str) -> list[str]:
    """Split on runs of space, tab, CR, LF; drops empty pieces."""
    return [t for t in _WS_RUN.split(text) if t]


def is_alphabetic_word(token: str) -> bool:
    """True iff the token is non-empty and uses only A-Z, a-z, or ASCII '."""
    return bool(token) and _ALPHABETIC.fullmatch(token) is not None


def _unfold(lines: list[str]) -> list[str]:
    unfolded: list[str] = []
    for line in lines:
        line = line.rstrip("\r")
        if line[:1] in (" ", "\t") and unfolded:
            unfolded[-1] += " " + line.strip()
        else:
            unfolded.append(line)
    return unfolded


def parse_email(raw: RawEmail) -> ParsedEmail:
    """Split a message into its header section and body.

    Headers are every line before the first blank line, with folded
    continuations joined by a single space. Undecodable bytes become
    U+FFFD rather than failing: garbled encodings are common in exactly
    the messages worth classifying.

    Raises MalformedMessage when the header section contains no line
    with a ':' separator.
    """
    if not raw.data:
        raise MalformedMessage(f"{raw.source_id or 'message'}: empty input")
    text = raw.data.decode("utf-8", errors="replace")
    lines = text.split("\n")

    blank_at = None
    for i, line in enumerate(lines):
        if line.rstrip("\r") == "":
            blank_at = i
            break
    if blank_at is None:
        head_lines, body = lines, ""
    else:
        head_lines = lines[:blank_at]
        body = "\n".join(lines[blank_at + 1 :])

    unfolded = _unfold(head_lines)
    headers: list[tuple[str, str]] = []
    for line in unfolded:
        name, sep, value = line.partition(":")
        if sep:
            headers.append((name.strip().lower(), value.strip()))
    if not headers:
        raise MalformedMessage(
            f"{raw.source_id or 'message'}: no header line with ':' found"
        )

    def first(name: str) -> str | None:
        for n, v in headers:
            if n == name:
                return v
        return None

    subject = first("subject") or ""

    priority_raw = None
    for name in _PRIORITY_HEADERS:
        value = first(name)
        if value:
            priority_raw = value
            break

    content_type_raw = None
    ct = first("content-type")
    if ct is not None:
        content_type_raw = ct.partition(";")[0].strip().lower()

    return ParsedEmail(
        subject=subject,
        priority_raw=priority_raw,
        content_type_raw=content_type_raw,
        body=body,
        header_names=tuple(n for n, _ in headers),
        source_id=raw.source_id,
        header_lines=tuple(unfolded),
    )


def split_mbox(data: bytes) -> list[bytes]:
    """Split an mbox byte stream on lines beginning "From " at column 0.

    The "From " separator lines themselves are dropped; segments that are
    empty or whitespace-only are skipped.
    """
    messages: list[bytes] = []
    current: list[bytes] | None = None
    for line in data.split(b"\n"):
        if line.startswith(b"From "):
            if current is not None:
                messages.append(b"\n".join(current))
            current = []
        elif current is not None:
            current.append(line)
    if current is not None:
        messages.append(b"\n".join(current))
    return [m for m in messages if m.strip()]
