"""Multinomial logistic regression trained by full-batch gradient descent."""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, ClassifierMixin
from sklearn.utils.validation import check_array, check_is_fitted, check_X_y


def softmax(z: np.ndarray) -> np.ndarray:
    z = z - z.max(axis=1, keepdims=True)
    e = np.exp(z)
    return e / e.sum(axis=1, keepdims=True)


def _largest_eigenvalue(x: np.ndarray, iters: int = 50, seed: int = 0) -> float:
    """Power iteration for the top eigenvalue of x^T x / rows."""
    v = np.random.default_rng(seed).standard_normal(x.shape[1])
    lam = 0.0
    for _ in range(iters):
        w = x.T @ (x @ v) / len(x)
        lam = float(np.linalg.norm(w))
        if lam == 0:
            return 0.0
        v = w / lam
    return lam


class LogisticRegression(BaseEstimator, ClassifierMixin):
    """Softmax regression with an L2 penalty on the weights.

    Features are mean-centred internally, so constant columns have zero
    gradient at every step and keep zero weight. The step size is the
    inverse of a Lipschitz bound of the loss gradient.

    Parameters
    ----------
    alpha : float
        L2 penalty strength (on weights, not intercepts).
    max_iter : int
        Gradient steps before giving up on the tolerance.
    tol : float
        Stop when the gradient's Frobenius norm drops below this.
    """

    def __init__(self, alpha=1e-3, max_iter=2000, tol=1e-5, random_state=0):
        self.alpha = alpha
        self.max_iter = max_iter
        self.tol = tol
        self.random_state = random_state

    def _grad(self, xc, y1h, W, b):
        p = softmax(xc @ W + b)
        r = (p - y1h) / len(xc)
        return xc.T @ r + self.alpha * W, r.sum(axis=0)

    def fit(self, X, y):
        X, y = check_X_y(X, y)
        self.classes_, yi = np.unique(y, return_inverse=True)
        if len(self.classes_) < 2:
            raise ValueError("training data contains a single class; logistic regression needs two")
        k = len(self.classes_)
        constant = np.ptp(X, axis=0) == 0
        self.mean_ = np.where(constant, X[0], X.mean(axis=0))
        xc = X - self.mean_  # constant columns become exact zeros
        y1h = np.eye(k)[yi]
        # the softmax cross-entropy Hessian is bounded by (1/2) Z^T Z / rows with
        # Z = [xc, 1]; centred columns are orthogonal to the ones column
        lam = _largest_eigenvalue(xc, seed=self.random_state) * 1.05
        lip = 0.5 * max(lam, 1.0) + self.alpha
        step = 1.0 / lip
        W = np.zeros((X.shape[1], k))
        b = np.zeros(k)
        self.n_iter_ = self.max_iter
        for it in range(self.max_iter):
            gW, gb = self._grad(xc, y1h, W, b)
            if np.sqrt(np.sum(gW ** 2) + np.sum(gb ** 2)) < self.tol:
                self.n_iter_ = it
                break
            W -= step * gW
            b -= step * gb
        self.coef_ = W.T
        self.intercept_ = b - self.mean_ @ W
        return self

    def decision_function(self, X):
        check_is_fitted(self, "coef_")
        X = check_array(X)
        if X.shape[1] != self.coef_.shape[1]:
            raise ValueError(f"expected {self.coef_.shape[1]} features, got {X.shape[1]}")
        return X @ self.coef_.T + self.intercept_

    def predict_proba(self, X):
        return softmax(self.decision_function(X))

    def predict(self, X):
        return self.classes_[np.argmax(self.decision_function(X), axis=1)]
