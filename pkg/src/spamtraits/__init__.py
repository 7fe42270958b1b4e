"""Spam email classification from spammer behavioral patterns.

Pipeline: parse raw messages, extract 21 structural features from
subject, headers, and body, then train and evaluate a Gaussian naive
Bayes classifier and a small sigmoid MLP, optionally narrowing the
feature set with best-first forward selection.
"""

__version__ = "0.1.0"

from .corpus import (
    Corpus,
    CorpusEntry,
    CorpusManifest,
    Dataset,
    build_dataset,
    dataset_from_csv,
    dataset_to_csv,
    format_value,
    ingest,
    read_dataset_csv,
    select_by_names,
    synth_corpus,
    write_corpus_two_dirs,
    write_dataset_csv,
)
from .errors import (
    CorruptModel,
    DimensionMismatch,
    EmptyClass,
    EmptyMatrix,
    FeatureMismatch,
    FoldEvaluationError,
    InvalidSubset,
    LengthMismatch,
    MalformedMessage,
    NoMessagesFound,
    NonFiniteLoss,
    SpamtraitsError,
    TooFewSamples,
    UnsupportedVersion,
)
from .evaluation import (
    ClassMetrics,
    ConfusionMatrix,
    EvalReport,
    confusion,
    cross_validate,
    format_comparison_table,
    format_report,
    metrics,
    stratified_folds,
)
from .features import (
    FEATURE_COUNT,
    FEATURE_NAMES,
    FeatureCategory,
    FeatureVector,
    category_indices,
    extract,
    project,
)
from .mlp import MLPConfig, MLPLearner, MLPModel, mlp_gradient, mlp_predict, mlp_train
from .model_io import (
    FORMAT_VERSION,
    ModelFile,
    deserialize_model,
    load_model,
    parse_model_file,
    save_model,
    serialize_model,
)
from .naive_bayes import (
    NaiveBayesLearner,
    NBConfig,
    NBModel,
    log_likelihood_terms,
    nb_fit,
    nb_posterior,
    nb_predict,
)
from .parser import ParsedEmail, RawEmail, is_alphabetic_word, parse_email, split_mbox, tokenize
from .selection import (
    FeatureSubset,
    SearchConfig,
    WrapperEvaluator,
    best_first_forward,
    evaluate_subset,
    format_indices,
    report_selection,
)

__all__ = [
    "__version__",
    "FORMAT_VERSION",
    "FEATURE_COUNT",
    "FEATURE_NAMES",
    "SpamtraitsError",
    "MalformedMessage",
    "InvalidSubset",
    "EmptyClass",
    "DimensionMismatch",
    "NonFiniteLoss",
    "LengthMismatch",
    "EmptyMatrix",
    "TooFewSamples",
    "NoMessagesFound",
    "UnsupportedVersion",
    "CorruptModel",
    "FeatureMismatch",
    "FoldEvaluationError",
    "RawEmail",
    "ParsedEmail",
    "parse_email",
    "tokenize",
    "is_alphabetic_word",
    "split_mbox",
    "FeatureVector",
    "FeatureCategory",
    "extract",
    "project",
    "category_indices",
    "NBConfig",
    "NBModel",
    "nb_fit",
    "nb_posterior",
    "nb_predict",
    "log_likelihood_terms",
    "NaiveBayesLearner",
    "MLPConfig",
    "MLPModel",
    "mlp_train",
    "mlp_predict",
    "mlp_gradient",
    "MLPLearner",
    "ConfusionMatrix",
    "ClassMetrics",
    "EvalReport",
    "confusion",
    "metrics",
    "stratified_folds",
    "cross_validate",
    "format_report",
    "format_comparison_table",
    "WrapperEvaluator",
    "SearchConfig",
    "FeatureSubset",
    "evaluate_subset",
    "best_first_forward",
    "format_indices",
    "report_selection",
    "Corpus",
    "CorpusEntry",
    "CorpusManifest",
    "Dataset",
    "ingest",
    "build_dataset",
    "synth_corpus",
    "write_corpus_two_dirs",
    "dataset_to_csv",
    "format_value",
    "dataset_from_csv",
    "write_dataset_csv",
    "read_dataset_csv",
    "select_by_names",
    "ModelFile",
    "serialize_model",
    "deserialize_model",
    "parse_model_file",
    "save_model",
    "load_model",
]
