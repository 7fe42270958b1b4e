"""Command-line pipeline: synth, extract, evaluate, select, train, classify.

Outputs go to stdout, diagnostics to stderr. Exit codes: 0 success,
1 usage error, 2 data error, 3 internal error. Every command is a pure
function of its flags; seeds default to 1 and are always explicit in
the config, so re-runs are byte-identical.
"""

from __future__ import annotations

import argparse
import re
import sys
from pathlib import Path

import numpy as np

from . import __version__
from .corpus import (
    LAYOUTS,
    Dataset,
    build_dataset,
    dataset_to_csv,
    ingest,
    read_dataset_csv,
    select_by_names,
    synth_corpus,
    write_corpus_two_dirs,
)
from .errors import EmptyClass, SpamtraitsError
from .evaluation import EvalReport, cross_validate, format_comparison_table
from .features import FEATURE_COUNT, FEATURE_NAMES, FeatureCategory, category_indices, extract
from .mlp import MLPConfig, MLPLearner, mlp_predict, mlp_train
from .model_io import FORMAT_VERSION, load_model, save_model
from .naive_bayes import (
    NaiveBayesLearner,
    NBConfig,
    NBModel,
    log_likelihood_terms,
    nb_fit,
    nb_posterior,
)
from .parser import RawEmail, parse_email
from .selection import (
    FeatureSubset,
    SearchConfig,
    WrapperEvaluator,
    best_first_forward,
    report_selection,
)

CLASSIFIER_NAMES = {"nb": "Naive Bayes", "mlp": "MLP"}

_INDEX_ITEM = re.compile(r"f?(\d+)\Z")


class UsageError(Exception):
    """Bad flags or flag values; maps to exit code 1."""


class _Parser(argparse.ArgumentParser):
    # argparse exits with status 2 on usage errors; the contract here is 1.
    def error(self, message: str) -> None:  # type: ignore[override]
        self.print_usage(sys.stderr)
        raise UsageError(message)


def parse_feature_spec(spec: str) -> list[int] | None:
    """Resolve a --features value to 1-based canonical indices.

    Accepts category names (cat1/cat2/cat3), explicit indices (8 or f8),
    and "all", comma-separated. Duplicates collapse to the first mention.
    Returns None for a plain "all", meaning: keep the dataset's columns.
    """
    items = [item.strip().lower() for item in spec.split(",") if item.strip()]
    if not items:
        raise UsageError("--features is empty")
    if items == ["all"]:
        return None
    indices: list[int] = []
    seen: set[int] = set()

    def push(i: int) -> None:
        if i not in seen:
            seen.add(i)
            indices.append(i)

    for item in items:
        if item == "all":
            for i in range(1, FEATURE_COUNT + 1):
                push(i)
        elif item in ("cat1", "cat2", "cat3"):
            category = FeatureCategory(int(item[3]))
            for i in category_indices(category):
                push(i)
        else:
            m = _INDEX_ITEM.match(item)
            if not m:
                raise UsageError(
                    f"bad --features item {item!r}; expected all, cat1..cat3, an index, or fN"
                )
            i = int(m.group(1))
            if not 1 <= i <= FEATURE_COUNT:
                raise UsageError(f"feature index {i} outside 1..{FEATURE_COUNT}")
            push(i)
    return indices


def _apply_feature_spec(dataset: Dataset, spec: str) -> Dataset:
    indices = parse_feature_spec(spec)
    if indices is None:
        return dataset
    return select_by_names(dataset, [f"f{i}" for i in indices])


def _require_labels(dataset: Dataset, task: str) -> None:
    unlabeled = [v.source_id for v in dataset.vectors if v.label is None]
    if unlabeled:
        raise EmptyClass(
            f"labels required for {task}; {len(unlabeled)} unlabeled rows "
            f"(first: {unlabeled[0] or '<blank>'})"
        )


def _nb_config(args: argparse.Namespace) -> NBConfig:
    try:
        return NBConfig(
            variance_floor=args.variance_floor, prior_smoothing=args.prior_smoothing
        )
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _mlp_config(args: argparse.Namespace) -> MLPConfig:
    try:
        return MLPConfig(
            hidden_units=args.hidden_units,
            learning_rate=args.learning_rate,
            momentum=args.momentum,
            epochs=args.epochs,
            seed=args.seed,
        )
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _make_learner(kind: str, args: argparse.Namespace):
    if kind == "nb":
        return NaiveBayesLearner(_nb_config(args))
    return MLPLearner(_mlp_config(args))


def _check_k(args: argparse.Namespace) -> None:
    if args.k < 2:
        raise UsageError(f"--k must be >= 2, got {args.k}")


def cmd_extract(args: argparse.Namespace) -> int:
    corpus = ingest(args.corpus, args.layout)
    dataset = build_dataset(corpus, jobs=args.jobs)
    dataset = _apply_feature_spec(dataset, args.features)
    text = dataset_to_csv(dataset)
    if args.out == "-":
        sys.stdout.write(text)
    else:
        Path(args.out).write_text(text)
    print(
        f"extracted {len(dataset.vectors)} messages from {corpus.manifest.source} "
        f"({len(corpus.manifest.failures)} failed)",
        file=sys.stderr,
    )
    for source_id, reason in corpus.manifest.failures:
        print(f"skipped {source_id}: {reason}", file=sys.stderr)
    return 0


def cmd_evaluate(args: argparse.Namespace) -> int:
    _check_k(args)
    dataset = read_dataset_csv(args.data)
    _require_labels(dataset, "evaluation")
    dataset = _apply_feature_spec(dataset, args.features)
    kinds = ("nb", "mlp") if args.both else (args.classifier,)
    reports: dict[str, EvalReport] = {}
    for kind in kinds:
        learner = _make_learner(kind, args)
        reports[CLASSIFIER_NAMES[kind]] = cross_validate(
            learner, dataset.vectors, k=args.k, seed=args.seed
        )
    print(format_comparison_table([(args.features, reports)]))
    return 0


def _canonical_indices(names: list[str], positions: tuple[int, ...]) -> tuple[int, ...]:
    # Display positions as the familiar f-numbers when the columns carry them.
    out = []
    for p in positions:
        m = _INDEX_ITEM.match(names[p - 1])
        out.append(int(m.group(1)) if m else p)
    return tuple(sorted(out))


def cmd_select(args: argparse.Namespace) -> int:
    _check_k(args)
    if args.stale_limit < 1:
        raise UsageError(f"--stale-limit must be >= 1, got {args.stale_limit}")
    if args.max_evals is not None and args.max_evals < 1:
        raise UsageError(f"--max-evals must be >= 1, got {args.max_evals}")
    dataset = read_dataset_csv(args.data)
    _require_labels(dataset, "feature selection")
    dataset = _apply_feature_spec(dataset, args.features)

    learner = _make_learner(args.classifier, args)
    config = SearchConfig(
        evaluator=WrapperEvaluator(learner=learner, k_folds=args.k, seed=args.seed),
        stale_limit=args.stale_limit,
        max_evaluations=args.max_evals,
    )
    result = best_first_forward(dataset.vectors, config)

    chosen_names = [dataset.feature_names[i - 1] for i in result.indices]
    display = FeatureSubset(
        indices=_canonical_indices(list(dataset.feature_names), result.indices),
        merit=result.merit,
        evaluations_used=result.evaluations_used,
        budget_exhausted=result.budget_exhausted,
    )
    subset_data = select_by_names(dataset, chosen_names)
    subset_reports: dict[str, EvalReport] = {}
    full_reports: dict[str, EvalReport] = {}
    for kind in ("nb", "mlp"):
        learner = _make_learner(kind, args)
        name = CLASSIFIER_NAMES[kind]
        full_reports[name] = cross_validate(learner, dataset.vectors, k=args.k, seed=args.seed)
        subset_reports[name] = cross_validate(
            learner, subset_data.vectors, k=args.k, seed=args.seed
        )
    print(report_selection(display, subset_reports, full_reports))
    return 0


def cmd_train(args: argparse.Namespace) -> int:
    dataset = read_dataset_csv(args.data)
    _require_labels(dataset, "training")
    dataset = _apply_feature_spec(dataset, args.features)
    if args.classifier == "nb":
        model = nb_fit(dataset.vectors, _nb_config(args))
    else:
        model = mlp_train(dataset.vectors, _mlp_config(args))
    save_model(model, dataset.feature_names, args.out)
    kind = "naive_bayes" if args.classifier == "nb" else "mlp"
    print(
        f"wrote {kind} model over {len(dataset.feature_names)} features to {args.out}",
        file=sys.stderr,
    )
    return 0


def _classify_inputs(args: argparse.Namespace, model_names: tuple[str, ...]) -> Dataset:
    if args.data:
        dataset = read_dataset_csv(args.data)
    elif args.corpus:
        corpus = ingest(args.corpus, args.layout)
        dataset = build_dataset(corpus, jobs=args.jobs)
        for source_id, reason in corpus.manifest.failures:
            print(f"skipped {source_id}: {reason}", file=sys.stderr)
    else:
        data = sys.stdin.buffer.read()
        vector = extract(parse_email(RawEmail(data, "<stdin>")))
        dataset = Dataset(vectors=(vector,), feature_names=FEATURE_NAMES)
    # Models trained on a subset project wider inputs down automatically.
    return select_by_names(dataset, list(model_names))


def cmd_classify(args: argparse.Namespace) -> int:
    model, model_names = load_model(args.model)
    if args.explain and not isinstance(model, NBModel):
        raise UsageError("--explain requires a naive_bayes model")
    dataset = _classify_inputs(args, model_names)

    classes = model.classes
    spam_index = classes.index("spam") if "spam" in classes else 0
    for v in dataset.vectors:
        if isinstance(model, NBModel):
            posterior = nb_posterior(model, v)
            label = classes[int(np.argmax(posterior))]
            p_spam = float(posterior[spam_index])
        else:
            label, activations = mlp_predict(model, v)
            p_spam = float(activations[spam_index] / activations.sum())
        print(f"{v.source_id}\t{label}\t{p_spam:.6f}")
        if args.explain:
            assert isinstance(model, NBModel)
            log_priors = np.log(model.priors)
            prior_cells = "\t".join(
                f"{c}={log_priors[i]:+.6f}" for i, c in enumerate(classes)
            )
            print(f"# prior\t{prior_cells}")
            terms = log_likelihood_terms(model, v)
            for j, name in enumerate(model_names):
                cells = "\t".join(
                    f"{c}={terms[i, j]:+.6f}" for i, c in enumerate(classes)
                )
                print(f"# {name}\t{cells}")
    return 0


def cmd_synth(args: argparse.Namespace) -> int:
    if args.n < 2:
        raise UsageError(f"--n must be >= 2, got {args.n}")
    if not 0 < args.spam_rate < 1:
        raise UsageError(f"--spam-rate must be strictly between 0 and 1, got {args.spam_rate}")
    corpus = synth_corpus(args.n, args.spam_rate, args.seed)
    write_corpus_two_dirs(corpus, args.out)
    print(f"wrote {len(corpus.entries)} messages to {args.out}", file=sys.stderr)
    return 0


def build_parser() -> _Parser:
    parser = _Parser(prog="spamtraits", description=__doc__)
    parser.add_argument(
        "--version",
        action="version",
        version=f"%(prog)s {__version__} (model format {FORMAT_VERSION})",
    )
    sub = parser.add_subparsers(dest="command", metavar="command")

    hyper = _Parser(add_help=False)
    hyper.add_argument("--variance-floor", type=float, default=1e-6)
    hyper.add_argument("--prior-smoothing", type=float, default=1.0)
    hyper.add_argument("--hidden-units", type=int, default=None)
    hyper.add_argument("--learning-rate", type=float, default=0.3)
    hyper.add_argument("--momentum", type=float, default=0.2)
    hyper.add_argument("--epochs", type=int, default=500)

    p = sub.add_parser("synth", help="write a deterministic synthetic corpus")
    p.add_argument("--out", required=True, help="directory for the two-dirs corpus")
    p.add_argument("--n", type=int, default=200)
    p.add_argument("--spam-rate", type=float, default=0.5)
    p.add_argument("--seed", type=int, default=1)
    p.set_defaults(func=cmd_synth)

    p = sub.add_parser("extract", help="corpus -> feature CSV")
    p.add_argument("--corpus", required=True)
    p.add_argument("--layout", choices=("auto", *LAYOUTS), default="auto")
    p.add_argument("--features", default="all")
    p.add_argument("--out", default="-", help="output CSV path, - for stdout")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_extract)

    p = sub.add_parser("evaluate", help="cross-validate a classifier on a dataset CSV", parents=[hyper])
    p.add_argument("--data", required=True)
    p.add_argument("--classifier", choices=("nb", "mlp"), default="nb")
    p.add_argument("--both", action="store_true", help="evaluate both classifiers")
    p.add_argument("--features", default="all")
    p.add_argument("--k", type=int, default=10)
    p.add_argument("--seed", type=int, default=1)
    p.set_defaults(func=cmd_evaluate)

    p = sub.add_parser("select", help="best-first forward feature selection", parents=[hyper])
    p.add_argument("--data", required=True)
    p.add_argument("--classifier", choices=("nb", "mlp"), default="nb")
    p.add_argument("--features", default="all")
    p.add_argument("--k", type=int, default=10)
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--stale-limit", type=int, default=5)
    p.add_argument("--max-evals", type=int, default=None)
    p.set_defaults(func=cmd_select)

    p = sub.add_parser("train", help="fit a model on a dataset CSV", parents=[hyper])
    p.add_argument("--data", required=True)
    p.add_argument("--classifier", choices=("nb", "mlp"), default="nb")
    p.add_argument("--features", default="all")
    p.add_argument("--out", required=True, help="model file path")
    p.add_argument("--seed", type=int, default=1)
    p.set_defaults(func=cmd_train)

    p = sub.add_parser("classify", help="label messages with a saved model")
    p.add_argument("--model", required=True)
    p.add_argument("--corpus", help="message directory/mbox/manifest to classify")
    p.add_argument("--data", help="already-extracted dataset CSV to classify")
    p.add_argument("--layout", choices=("auto", *LAYOUTS), default="auto")
    p.add_argument("--explain", action="store_true", help="per-feature log-likelihood addends (naive Bayes)")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_classify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except SystemExit as exc:  # --help / --version
        return exc.code if isinstance(exc.code, int) else 0
    if getattr(args, "func", None) is None:
        parser.print_usage(sys.stderr)
        print("error: a command is required", file=sys.stderr)
        return 1
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except SpamtraitsError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:  # pragma: no cover - defensive
        print(f"internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
