"""Corpus ingestion, dataset CSV interchange, and a synthetic corpus
generator for experiments when no real mail is at hand.

Supported corpus layouts:
  two-dirs       directory with spam/ and ham/ subdirectories, one message per file
  mbox-pair      directory with spam.mbox and ham.mbox files
  manifest-file  text file of "<label><TAB><path>" lines, paths relative to it
  flat-dir       directory of unlabeled message files (classification input)
"""

from __future__ import annotations

import csv
import io
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

from .errors import (
    DimensionMismatch,
    FeatureMismatch,
    MalformedMessage,
    NoMessagesFound,
    SpamtraitsError,
)
from .features import FEATURE_NAMES, PROPORTION_NAMES, FeatureVector, extract, project
from .parser import RawEmail, parse_email, split_mbox

SPAM = "spam"
HAM = "ham"
UNLABELED = "unlabeled"
LAYOUTS = ("two-dirs", "mbox-pair", "manifest-file", "flat-dir")


@dataclass(frozen=True)
class CorpusManifest:
    source: str
    layout: str
    failures: tuple[tuple[str, str], ...] = ()  # (source_id, reason)


@dataclass(frozen=True)
class CorpusEntry:
    raw: RawEmail
    label: str


@dataclass(frozen=True)
class Corpus:
    entries: tuple[CorpusEntry, ...]
    manifest: CorpusManifest


@dataclass(frozen=True)
class Dataset:
    vectors: tuple[FeatureVector, ...]
    feature_names: tuple[str, ...]

    def __post_init__(self) -> None:
        for v in self.vectors:
            if len(v.values) != len(self.feature_names):
                raise DimensionMismatch(
                    f"vector {v.source_id!r} has {len(v.values)} values, "
                    f"expected {len(self.feature_names)}"
                )


def _detect_layout(path: Path) -> str:
    if path.is_file():
        return "manifest-file"
    if (path / SPAM).is_dir() or (path / HAM).is_dir():
        return "two-dirs"
    if (path / "spam.mbox").is_file() or (path / "ham.mbox").is_file():
        return "mbox-pair"
    return "flat-dir"


def _collect(
    path: Path, layout: str
) -> tuple[list[tuple[RawEmail, str]], list[tuple[str, str]]]:
    found: list[tuple[RawEmail, str]] = []
    failures: list[tuple[str, str]] = []
    if layout == "two-dirs":
        for label in (HAM, SPAM):
            subdir = path / label
            if not subdir.is_dir():
                continue
            for f in sorted(p for p in subdir.iterdir() if p.is_file()):
                found.append((RawEmail(f.read_bytes(), f"{label}/{f.name}"), label))
    elif layout == "mbox-pair":
        for label in (HAM, SPAM):
            mbox = path / f"{label}.mbox"
            if not mbox.is_file():
                continue
            for i, data in enumerate(split_mbox(mbox.read_bytes())):
                found.append((RawEmail(data, f"{label}.mbox:{i}"), label))
    elif layout == "manifest-file":
        base = path.parent
        for lineno, line in enumerate(path.read_text().splitlines(), start=1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            label, sep, rel = line.partition("\t")
            label = label.strip()
            if not sep or label not in (SPAM, HAM, UNLABELED):
                raise SpamtraitsError(
                    f"{path}:{lineno}: expected '<spam|ham|unlabeled><TAB><path>', got {line!r}"
                )
            target = base / rel.strip()
            if not target.is_file():
                failures.append((rel.strip(), f"file not found: {target}"))
            else:
                found.append((RawEmail(target.read_bytes(), rel.strip()), label))
    elif layout == "flat-dir":
        for f in sorted(p for p in path.iterdir() if p.is_file()):
            found.append((RawEmail(f.read_bytes(), f.name), UNLABELED))
    else:
        raise ValueError(f"unknown layout {layout!r}, expected one of {LAYOUTS}")
    return found, failures


def ingest(path: str | Path, layout: str = "auto") -> Corpus:
    """Load a corpus from disk; per-message failures are recorded in the
    manifest instead of aborting the run."""
    path = Path(path)
    if not path.exists():
        raise NoMessagesFound(f"corpus path {path} does not exist")
    if layout == "auto":
        layout = _detect_layout(path)

    entries: list[CorpusEntry] = []
    found, failures = _collect(path, layout)
    for raw, label in found:
        try:
            parse_email(raw)
        except MalformedMessage as exc:
            failures.append((raw.source_id, str(exc)))
            continue
        entries.append(CorpusEntry(raw=raw, label=label))
    if not entries:
        raise NoMessagesFound(f"no usable messages found at {path} (layout {layout})")
    return Corpus(
        entries=tuple(entries),
        manifest=CorpusManifest(
            source=str(path), layout=layout, failures=tuple(failures)
        ),
    )


def _entry_vector(entry: CorpusEntry) -> FeatureVector:
    vector = extract(parse_email(entry.raw))
    label = entry.label if entry.label != UNLABELED else None
    return FeatureVector(values=vector.values, label=label, source_id=vector.source_id)


def build_dataset(corpus: Corpus, jobs: int = 1) -> Dataset:
    """Extract features for every entry, preserving corpus order."""
    if jobs > 1 and len(corpus.entries) > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            vectors = tuple(pool.map(_entry_vector, corpus.entries))
    else:
        vectors = tuple(_entry_vector(e) for e in corpus.entries)
    return Dataset(vectors=vectors, feature_names=FEATURE_NAMES)


def format_value(name: str, value: float) -> str:
    """Shortest decimal text that parses back to the identical float.

    Proportion columns always carry at least six decimal places; other
    columns print integral values as plain integers.
    """
    if name not in PROPORTION_NAMES and value == int(value) and abs(value) < 1e15:
        return str(int(value))
    fixed = f"{value:.6f}"
    if float(fixed) == value:
        return fixed
    return repr(float(value))


def dataset_to_csv(dataset: Dataset) -> str:
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow([*dataset.feature_names, "label", "source_id"])
    for v in dataset.vectors:
        row = [format_value(n, x) for n, x in zip(dataset.feature_names, v.values)]
        writer.writerow([*row, v.label or "", v.source_id])
    return out.getvalue()


def dataset_from_csv(text: str) -> Dataset:
    rows = list(csv.reader(io.StringIO(text)))
    if not rows:
        raise SpamtraitsError("dataset CSV is empty")
    header = rows[0]
    if len(header) < 3 or header[-2:] != ["label", "source_id"]:
        raise SpamtraitsError(
            "dataset CSV header must end with 'label,source_id', "
            f"got {','.join(header)!r}"
        )
    names = tuple(header[:-2])
    vectors: list[FeatureVector] = []
    for lineno, row in enumerate(rows[1:], start=2):
        if len(row) != len(header):
            raise SpamtraitsError(
                f"dataset CSV row {lineno} has {len(row)} fields, expected {len(header)}"
            )
        try:
            values = tuple(float(s) for s in row[: len(names)])
        except ValueError as exc:
            raise SpamtraitsError(f"dataset CSV row {lineno}: {exc}") from exc
        label = row[len(names)] or None
        if label not in (None, SPAM, HAM):
            raise SpamtraitsError(
                f"dataset CSV row {lineno}: label must be spam, ham, or empty, got {label!r}"
            )
        vectors.append(
            FeatureVector(values=values, label=label, source_id=row[len(names) + 1])
        )
    return Dataset(vectors=tuple(vectors), feature_names=names)


def write_dataset_csv(dataset: Dataset, path: str | Path) -> None:
    Path(path).write_text(dataset_to_csv(dataset))


def read_dataset_csv(path: str | Path) -> Dataset:
    return dataset_from_csv(Path(path).read_text())


def select_by_names(dataset: Dataset, names: Sequence[str]) -> Dataset:
    """Restrict a dataset to the named features, in the given order."""
    missing = [n for n in names if n not in dataset.feature_names]
    if missing:
        raise FeatureMismatch(
            f"features {missing} not present; dataset has {list(dataset.feature_names)}"
        )
    positions = [dataset.feature_names.index(n) + 1 for n in names]
    return Dataset(
        vectors=tuple(project(v, positions) for v in dataset.vectors),
        feature_names=tuple(names),
    )


# --- synthetic corpus ------------------------------------------------------

_HAM_WORDS = (
    "meeting", "report", "thanks", "schedule", "project", "update", "review",
    "notes", "budget", "team", "please", "send", "tomorrow", "morning",
    "question", "about", "the", "plan", "draft", "office", "minutes", "agenda",
)
_SPAM_WORDS = (
    "free", "winner", "cash", "offer", "deal", "bonus", "prize", "money",
    "click", "now", "limited", "exclusive", "savings", "guaranteed", "trial",
)
# No vowels, at least two of j/k/q/x/z each; the 7+ character ones also
# trip the long-consonant-word proportion.
_GIBBERISH = ("xzkq", "qjzx", "zzkxw", "kqzjr", "xqzkwjq", "jqxzbkq", "zxkqjwz")
_MID_SPECIAL = ("fr33", "v1agra", "$$$save", "mon3y", "c4sh")
_LONG_TOKEN = "unbelievablediscountoffer"  # 25 chars
_HAM_NAMES = ("alice", "bob", "carol", "dave", "erin", "frank")


def _sentence(rng: random.Random, words: tuple[str, ...], n: int) -> str:
    return " ".join(rng.choice(words) for _ in range(n))


def _synth_ham(rng: random.Random) -> str:
    subject_words = [rng.choice(_HAM_WORDS) for _ in range(rng.randint(2, 5))]
    subject = " ".join(subject_words)
    if rng.random() < 0.3:
        subject = "RE: " + subject
    elif rng.random() < 0.1:
        subject = "FYI " + subject

    sender = rng.choice(_HAM_NAMES)
    recipient = rng.choice(_HAM_NAMES)
    headers = [
        f"From: {sender}@example.org",
        f"To: {recipient}@example.net",
        f"Subject: {subject}",
    ]
    if rng.random() < 0.2:
        headers.append("X-Priority: 3")
    if rng.random() < 0.9:
        headers.append("Content-Type: text/plain")

    lines = [_sentence(rng, _HAM_WORDS, rng.randint(5, 11)) for _ in range(rng.randint(2, 5))]
    if rng.random() < 0.08:
        lines.append('see the <a href="https://example.org/wiki/notes">notes</a>')
    if rng.random() < 0.05:
        lines.append("From: archive To: list")
    body = "\n".join(lines)
    return "\n".join(headers) + "\n\n" + body + "\n"


def _synth_spam(rng: random.Random) -> str:
    subject_words = [rng.choice(_SPAM_WORDS) for _ in range(rng.randint(2, 4))]
    if rng.random() < 0.5:
        subject_words = [w.upper() if rng.random() < 0.6 else w for w in subject_words]
    if rng.random() < 0.35:
        subject_words.append(rng.choice(_MID_SPECIAL))
    if rng.random() < 0.3:
        subject_words.append(rng.choice(_GIBBERISH))
    if rng.random() < 0.25:
        subject_words.append(_LONG_TOKEN)
    subject = " ".join(subject_words)
    if rng.random() < 0.45:
        subject += "!!!"

    headers = [
        f"From: promo{rng.randint(1, 999)}@deals.example.com",
        "To: you@example.net",
        f"Subject: {subject}",
    ]
    if rng.random() < 0.6:
        headers.append(f"X-Priority: {rng.choice(('1', '2', 'high'))}")
    ct = rng.random()
    if ct < 0.75:
        headers.append("Content-Type: text/html")
    elif ct < 0.85:
        headers.append("Content-Type: text/plain")
    # otherwise the header is omitted entirely

    lines: list[str] = []
    if rng.random() < 0.45:
        lines.extend("<!-- %s -->" % _sentence(rng, _SPAM_WORDS, 2) for _ in range(rng.randint(1, 3)))
    if rng.random() < 0.5:
        lines.append('<table bgcolor="#ffcc00"><tr><td>')
    pitch = [_sentence(rng, _SPAM_WORDS, rng.randint(4, 9)) for _ in range(rng.randint(1, 3))]
    if rng.random() < 0.75:
        pitch.append(_sentence(rng, _GIBBERISH, rng.randint(2, 6)))
    lines.extend(pitch)
    if rng.random() < 0.8:
        url = f"http://promo{rng.randint(10, 99)}.example.com/win?id={rng.randint(100, 9999)}&ref={rng.randint(1, 99)}"
        if rng.random() < 0.55:
            lines.append(f'<a href="{url}"><img src="banner{rng.randint(1, 9)}.gif"></a>')
        else:
            lines.append(f'<a href="{url}">claim {rng.choice(_SPAM_WORDS)}</a>')
    if rng.random() < 0.35:
        lines.append('<font color="#ffffff">%s</font>' % _sentence(rng, _SPAM_WORDS, 4))
    if rng.random() < 0.3:
        lines.append('<script>window.open("http://x%d.example.com")</script>' % rng.randint(1, 9))
    if rng.random() < 0.4:
        lines.append('<p style="color:red">%s</p>' % _sentence(rng, _SPAM_WORDS, 3))
    if rng.random() < 0.35:
        lines.append("From: friend To: you")
    if rng.random() < 0.5:
        lines.append("</td></tr></table>")
    body = "\n".join(lines)
    return "\n".join(headers) + "\n\n" + body + "\n"


def synth_corpus(n: int, spam_rate: float, seed: int = 1) -> Corpus:
    """Deterministic synthetic corpus planting the behavioral patterns the
    features look for in spam entries; ham entries are plain prose."""
    if n < 2:
        raise ValueError("n must be >= 2")
    if not 0 < spam_rate < 1:
        raise ValueError("spam_rate must be strictly between 0 and 1")
    n_spam = min(max(round(n * spam_rate), 1), n - 1)
    n_ham = n - n_spam
    rng = random.Random(seed)
    entries: list[CorpusEntry] = []
    for i in range(n_ham):
        text = _synth_ham(rng)
        entries.append(
            CorpusEntry(RawEmail(text.encode("utf-8"), f"ham-{i:04d}"), HAM)
        )
    for i in range(n_spam):
        text = _synth_spam(rng)
        entries.append(
            CorpusEntry(RawEmail(text.encode("utf-8"), f"spam-{i:04d}"), SPAM)
        )
    return Corpus(
        entries=tuple(entries),
        manifest=CorpusManifest(
            source=f"synth(n={n}, spam_rate={spam_rate}, seed={seed})",
            layout="synthetic",
        ),
    )


def write_corpus_two_dirs(corpus: Corpus, path: str | Path) -> None:
    """Write a corpus as a two-dirs layout; unlabeled entries go under
    messages/."""
    path = Path(path)
    for entry in corpus.entries:
        subdir = path / (entry.label if entry.label != UNLABELED else "messages")
        subdir.mkdir(parents=True, exist_ok=True)
        name = entry.raw.source_id.replace("/", "_")
        if not name.endswith(".eml"):
            name += ".eml"
        (subdir / name).write_bytes(entry.raw.data)
