"""Four-layer perceptron regressor trained with ADAM.

Forward map for a flattened input ``x``::

    h1 = sigmoid(x W1 + b1)          # width 500
    h2 = h1 W2 + b2                  # width 100
    h2 = tanh(h2)                    # optional
    y  = sum(h2)

The loss is the mean squared error. Gradients are written out by hand;
``loss_and_grad`` exposes them for finite-difference checking.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from sklearn.base import BaseEstimator, RegressorMixin
from sklearn.utils.validation import check_array, check_is_fitted, check_X_y

PARAM_NAMES = ("W1", "b1", "W2", "b2")


@dataclass(frozen=True)
class MlpSpec:
    input_dim: int
    hidden1: int = 500
    hidden2: int = 100
    tanh_output: bool = False

    def __post_init__(self):
        if min(self.input_dim, self.hidden1, self.hidden2) <= 0:
            raise ValueError("layer widths must be positive")


@dataclass(frozen=True)
class AdamConfig:
    lr: float = 1e-3
    beta1: float = 0.9
    beta2: float = 0.999
    eps: float = 1e-8
    batch_size: int = 64


def sigmoid(z: np.ndarray) -> np.ndarray:
    return 0.5 * (1.0 + np.tanh(0.5 * z))


def init_params(spec: MlpSpec, rng: np.random.Generator, scheme: str = "glorot") -> dict[str, np.ndarray]:
    """Glorot-uniform weights, r = sqrt(6 / (fan_in + fan_out)), zero biases.

    ``scheme="zeros"`` sets every parameter to 0.
    """
    shapes = {"W1": (spec.input_dim, spec.hidden1), "W2": (spec.hidden1, spec.hidden2)}
    p = {"b1": np.zeros(spec.hidden1), "b2": np.zeros(spec.hidden2)}
    for name, (fi, fo) in shapes.items():
        if scheme == "zeros":
            p[name] = np.zeros((fi, fo))
        elif scheme == "glorot":
            r = np.sqrt(6.0 / (fi + fo))
            p[name] = rng.uniform(-r, r, size=(fi, fo))
        else:
            raise ValueError(f"unknown initialisation scheme {scheme!r}")
    return p


def forward(params: dict, x: np.ndarray, tanh_output: bool):
    h1 = sigmoid(x @ params["W1"] + params["b1"])
    z2 = h1 @ params["W2"] + params["b2"]
    h2 = np.tanh(z2) if tanh_output else z2
    return h2.sum(axis=1), (h1, h2)


def loss_and_grad(params: dict, x: np.ndarray, t: np.ndarray, tanh_output: bool = False):
    """Mean squared error and its gradient with respect to every parameter."""
    y, (h1, h2) = forward(params, x, tanh_output)
    n = len(x)
    r = y - t
    loss = float(np.mean(r ** 2))
    dy = 2.0 * r / n                          # dL/dy
    dz2 = np.repeat(dy[:, None], h2.shape[1], axis=1)
    if tanh_output:
        dz2 = dz2 * (1.0 - h2 ** 2)
    grads = {"W2": h1.T @ dz2, "b2": dz2.sum(axis=0)}
    dh1 = dz2 @ params["W2"].T
    dz1 = dh1 * h1 * (1.0 - h1)
    grads["W1"] = x.T @ dz1
    grads["b1"] = dz1.sum(axis=0)
    return loss, grads


class MLPRegressor(BaseEstimator, RegressorMixin):
    """Scalar regressor with the sigmoid(500) -> linear(100) -> sum architecture.

    Parameters
    ----------
    hidden1, hidden2 : int
    tanh_output : bool
        Apply tanh elementwise before the final sum.
    epochs : int
    lr, beta1, beta2, eps : float
        ADAM settings.
    batch_size : int
    init : {"glorot", "zeros"}
    random_state : int
        Seeds initialisation and the per-epoch shuffles.
    """

    def __init__(self, hidden1=500, hidden2=100, tanh_output=False, epochs=50, lr=1e-3,
                 beta1=0.9, beta2=0.999, eps=1e-8, batch_size=64, init="glorot", random_state=0):
        self.hidden1 = hidden1
        self.hidden2 = hidden2
        self.tanh_output = tanh_output
        self.epochs = epochs
        self.lr = lr
        self.beta1 = beta1
        self.beta2 = beta2
        self.eps = eps
        self.batch_size = batch_size
        self.init = init
        self.random_state = random_state

    def _spec(self, input_dim: int) -> MlpSpec:
        return MlpSpec(input_dim, self.hidden1, self.hidden2, self.tanh_output)

    def initialize(self, input_dim: int) -> "MLPRegressor":
        rng = np.random.default_rng(self.random_state)
        self.spec_ = self._spec(input_dim)
        self.params_ = init_params(self.spec_, rng, self.init)
        self.n_features_in_ = input_dim
        return self

    def fit(self, X, y):
        X, y = check_X_y(X, y, y_numeric=True)
        y = y.astype(np.float64)
        self.initialize(X.shape[1])
        rng = np.random.default_rng(np.random.SeedSequence(self.random_state).generate_state(2)[1])
        cfg = AdamConfig(self.lr, self.beta1, self.beta2, self.eps, self.batch_size)
        m = {k: np.zeros_like(v) for k, v in self.params_.items()}
        v = {k: np.zeros_like(p) for k, p in self.params_.items()}
        step = 0
        self.loss_curve_ = []
        for _ in range(self.epochs):
            order = rng.permutation(len(X))
            total = 0.0
            for start in range(0, len(X), cfg.batch_size):
                b = order[start:start + cfg.batch_size]
                loss, g = loss_and_grad(self.params_, X[b], y[b], self.tanh_output)
                total += loss * len(b)
                step += 1
                c1 = 1.0 - cfg.beta1 ** step
                c2 = 1.0 - cfg.beta2 ** step
                for k in PARAM_NAMES:
                    m[k] = cfg.beta1 * m[k] + (1 - cfg.beta1) * g[k]
                    v[k] = cfg.beta2 * v[k] + (1 - cfg.beta2) * g[k] ** 2
                    self.params_[k] -= cfg.lr * (m[k] / c1) / (np.sqrt(v[k] / c2) + cfg.eps)
            self.loss_curve_.append(total / len(X))
        return self

    def predict(self, X):
        check_is_fitted(self, "params_")
        X = check_array(X)
        if X.shape[1] != self.n_features_in_:
            raise ValueError(f"expected {self.n_features_in_} features, got {X.shape[1]}")
        return forward(self.params_, X, self.tanh_output)[0]
