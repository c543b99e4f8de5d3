"""Exception types shared across the package.

The CLI maps these onto distinct exit codes, so keep the hierarchy flat.
"""


class VclabError(Exception):
    """Base class for all package errors."""


class ConfigError(VclabError):
    """A config file or run configuration failed validation."""


class CapExceededError(VclabError):
    """A combinatorial cap (set size, dimension, enumeration budget) was exceeded."""


class IndeterminateLabelingError(VclabError):
    """The margin LP finished with an optimal margin too close to zero to
    classify the labeling as realizable or not."""

    def __init__(self, labeling, margin):
        self.labeling = tuple(labeling)
        self.margin = float(margin)
        super().__init__(
            f"labeling {self.labeling} indeterminate: optimal margin "
            f"{self.margin:.3e} within tolerance of 0"
        )
