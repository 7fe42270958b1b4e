"""Exception types shared across the toolkit."""


class SpamtraitsError(Exception):
    """Base class for every error this package raises deliberately."""


class MalformedMessage(SpamtraitsError):
    """Input bytes do not contain a recognizable email header section."""


class InvalidSubset(SpamtraitsError):
    """Feature subset is empty, out of range, or contains duplicates."""


class EmptyClass(SpamtraitsError):
    """A declared class has no training samples, or fewer than two classes exist."""


class DimensionMismatch(SpamtraitsError):
    """Vector dimensionality differs from what the model or dataset expects."""


class NonFiniteLoss(SpamtraitsError):
    """Training loss became NaN or infinite, usually a divergent learning rate."""


class LengthMismatch(SpamtraitsError):
    """Predictions and ground truth differ in length."""


class EmptyMatrix(SpamtraitsError):
    """A confusion matrix over zero samples has no defined metrics."""


class TooFewSamples(SpamtraitsError):
    """A class has fewer samples than the requested number of folds."""


class NoMessagesFound(SpamtraitsError):
    """Corpus ingestion found no usable message at the given path."""


class UnsupportedVersion(SpamtraitsError):
    """Model file declares a format version this build does not read."""


class CorruptModel(SpamtraitsError):
    """Model file failed checksum verification or cannot be decoded."""


class FeatureMismatch(SpamtraitsError):
    """Model was trained on features the input does not provide."""


class FoldEvaluationError(SpamtraitsError):
    """Learner failure during cross-validation, annotated with the fold index."""

    def __init__(self, fold: int, cause: BaseException):
        super().__init__(f"fold {fold}: {cause}")
        self.fold = fold
        self.__cause__ = cause
