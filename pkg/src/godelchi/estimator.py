"""scikit-learn style front end: formulas in, characteristic vectors out."""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .characteristics import chi_vector
from .counting import P
from .formula import Formula, as_formula, max_var

__all__ = ["check_formulas", "GodelCharacteristic"]


def check_formulas(X) -> list[Formula]:
    """Coerce a 1-D collection (or single-column 2-D array) of formulas or formula strings."""
    if isinstance(X, (str, Formula)):
        raise ValueError("expected a collection of formulas, got a single formula; wrap it in a list")
    arr = np.asarray(X, dtype=object)
    if arr.ndim == 2 and arr.shape[1] == 1:
        arr = arr[:, 0]
    if arr.ndim != 1:
        raise ValueError(f"expected a 1-D collection of formulas, got shape {arr.shape}")
    return [as_formula(x) for x in arr]


class GodelCharacteristic(TransformerMixin, BaseEstimator):
    """Map formulas to their generalised Euler characteristics.

    ``fit`` fixes the number of variables (the largest index seen, unless
    ``n_vars`` is given). ``transform`` returns one row per formula holding
    ``chi_1 .. chi_{n+1}``. ``predict`` says whether each formula is a
    tautology of the ``(k+1)``-valued logic, or of the infinite-valued logic
    when ``k`` is None.

    Parameters
    ----------
    n_vars : int or None
        Ambient variable count. Must cover every formula passed later.
    k : int or None
        Truth-value parameter used by ``predict``.
    threads : int
        Worker threads for the pattern count.
    """

    def __init__(self, n_vars=None, k=None, threads=1):
        self.n_vars = n_vars
        self.k = k
        self.threads = threads

    def fit(self, X, y=None):
        formulas = check_formulas(X)
        least = max((max_var(f) for f in formulas), default=0)
        n = least if self.n_vars is None else self.n_vars
        if n < 1:
            raise ValueError("cannot infer the variable count from closed formulas; set n_vars")
        if n < least:
            raise ValueError(f"n_vars={n} is smaller than the largest variable index {least}")
        if self.k is not None and self.k < 1:
            raise ValueError(f"k must be >= 1, got {self.k}")
        self.n_vars_ = n
        self.p_row_ = np.array([P(n, k) for k in range(1, n + 2)], dtype=self._dtype(n))
        self.n_features_out_ = n + 1
        return self

    @staticmethod
    def _dtype(n):
        return np.int64 if P(n, n + 1) < 2**63 else object

    def _reports(self, X):
        check_is_fitted(self, "n_vars_")
        return [chi_vector(f, self.n_vars_, self.threads) for f in check_formulas(X)]

    def transform(self, X):
        reports = self._reports(X)
        out = np.empty((len(reports), self.n_vars_ + 1), dtype=self._dtype(self.n_vars_))
        for i, r in enumerate(reports):
            out[i] = r.chi
        return out

    def predict(self, X):
        chis = self.transform(X)
        k = self.n_vars_ + 1 if self.k is None else min(self.k, self.n_vars_ + 1)
        return chis[:, k - 1] == self.p_row_[k - 1]

    def get_feature_names_out(self, input_features=None):
        check_is_fitted(self, "n_vars_")
        return np.array([f"chi_{k}" for k in range(1, self.n_vars_ + 2)], dtype=object)
