import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from sklearn.metrics import f1_score, matthews_corrcoef

from graphgeom import families
from graphgeom.graph import GraphError
from graphgeom.learn import tasks
from graphgeom.learn.dataset import (N_FOLDS, build_dataset, dataset_to_csv, kfold, load_csv, load_npz,
                                     random_split, save_csv, save_npz, sequential_folds)
from graphgeom.learn.evaluation import (cross_validate, evaluate, make_learner, pca_project, summarize,
                                        training_curve)
from graphgeom.learn.linear import LogisticRegression
from graphgeom.learn.metrics import (ConfusionMatrix, binary_rates, confusion_matrix, linear_fit,
                                     matthews_phi, metrics, p_n)
from graphgeom.learn.mlp import MLPRegressor, MlpSpec, forward, init_params, loss_and_grad
from graphgeom.learn.tree import DecisionTreeClassifier, RandomForestClassifier

# ---------------------------------------------------------------- metrics


def test_confusion_layout_and_scores():
    c = ConfusionMatrix((0, 1), np.array([[40, 10], [5, 45]]))
    assert p_n(c) == pytest.approx(0.85)
    r = binary_rates(c)
    assert r.tpr == pytest.approx(0.9) and r.fpr == pytest.approx(0.2)
    assert r.precision == pytest.approx(45 / 55)
    assert r.f1 == pytest.approx(2 * 45 / (2 * 45 + 10 + 5))
    y = [0] * 50 + [1] * 50
    pred = [0] * 40 + [1] * 10 + [0] * 5 + [1] * 45
    assert matthews_phi(c) == pytest.approx(matthews_corrcoef(y, pred))


@pytest.mark.filterwarnings("ignore:A single label was found")
@given(st.lists(st.tuples(st.integers(0, 3), st.integers(0, 3)), min_size=1, max_size=60))
@settings(max_examples=100, deadline=None)
def test_phi_matches_sklearn_multiclass(pairs):
    y, p = zip(*pairs)
    c = confusion_matrix(y, p)
    assert c.total == len(pairs)
    assert matthews_phi(c) == pytest.approx(matthews_corrcoef(y, p), abs=1e-12)


@given(st.lists(st.tuples(st.integers(0, 1), st.integers(0, 1)), min_size=1, max_size=60))
@settings(max_examples=60, deadline=None)
def test_f1_matches_sklearn(pairs):
    y, p = zip(*pairs)
    c = confusion_matrix(y, p, labels=(0, 1))
    assert binary_rates(c).f1 == pytest.approx(f1_score(y, p, zero_division=0.0))


@pytest.mark.parametrize("k", [2, 3, 5])
def test_phi_extremes(k):
    assert matthews_phi(ConfusionMatrix(tuple(range(k)), np.diag(np.arange(1, k + 1)))) == pytest.approx(1.0)
    assert matthews_phi(ConfusionMatrix((0, 1), np.array([[0, 7], [3, 0]]))) == pytest.approx(-1.0)


def test_metric_edge_cases():
    assert matthews_phi(ConfusionMatrix((0, 1), np.array([[5, 0], [5, 0]]))) == 0.0
    with pytest.raises(ValueError):
        p_n(ConfusionMatrix((0, 1), np.zeros((2, 2), dtype=int)))
    with pytest.raises(ValueError):
        binary_rates(ConfusionMatrix((0, 1, 2), np.eye(3, dtype=int)))
    with pytest.raises(ValueError):
        confusion_matrix([0, 1], [0])
    assert set(metrics(confusion_matrix([0, 1, 2], [0, 1, 1]))) == {"P_N", "phi"}


def test_linear_fit():
    x = np.linspace(0, 5, 20)
    fit = linear_fit(2 * x + 1, x)
    assert (fit.a, fit.c, fit.r2) == pytest.approx((2, 1, 1))
    with pytest.raises(ValueError):
        linear_fit([1, 2], [3, 3])
    with pytest.raises(ValueError):
        linear_fit([1], [1])


# ---------------------------------------------------------------- datasets


def test_build_dataset_shapes_counts_and_folds():
    gs = [families.cycle(5), families.path(3), families.star(3)]
    d = build_dataset(gs, [1, 0, 0], 6, seed=3, multipliers={0: 2, 1: 5})
    # C5 has 12 labellings, so 5 are kept; P3 and the claw keep 2 each
    assert d.class_counts == {0: 4, 1: 5}
    assert d.features.shape == (9, 36)
    assert d.folds.tolist() == sequential_folds(9).tolist()
    assert sorted(set(d.folds.tolist())) == list(range(N_FOLDS))
    # every row is a symmetric 0/1 matrix with the right edge count
    for row, y in zip(d.features, d.targets):
        a = row.reshape(6, 6)
        assert np.array_equal(a, a.T) and a.sum() / 2 in (3, 5)


def test_build_dataset_determinism_and_errors():
    gs = [families.cycle(5), families.path(3)]
    a = build_dataset(gs, [1, 0], 5, seed=9, multipliers=3)
    b = build_dataset(gs, [1, 0], 5, seed=9, multipliers=3)
    assert np.array_equal(a.features, b.features) and np.array_equal(a.targets, b.targets)
    with pytest.raises(GraphError):
        build_dataset(gs, [1, 0], 4, seed=0)
    with pytest.raises(KeyError):
        build_dataset(gs, [1, 0], 5, seed=0, multipliers={1: 2})
    with pytest.raises(ValueError):
        build_dataset(gs, [1], 5, seed=0)


def test_folds_partition_rows():
    d = build_dataset([families.cycle(n) for n in range(3, 9)], [0, 1] * 3, 8, seed=1, multipliers=4)
    seen = []
    for i in range(1, N_FOLDS + 1):
        train, val = kfold(d, i)
        assert len(train) + len(val) == len(d)
        seen.append(len(val))
    assert sum(seen) == len(d) and max(seen) - min(seen) <= 1
    with pytest.raises(ValueError):
        kfold(d, 0)
    tr, va = random_split(d, 0.2, seed=0)
    assert len(tr) == round(0.2 * len(d)) and len(tr) + len(va) == len(d)
    with pytest.raises(ValueError):
        random_split(d, 1.0, 0)


def test_csv_and_npz_round_trip(tmp_path):
    d = build_dataset([families.cycle(4), families.path(2)], [1, 0], 4, seed=2, multipliers=2)
    save_csv(d, tmp_path / "d.csv")
    e = load_csv(tmp_path / "d.csv")
    assert np.array_equal(e.features, d.features) and np.array_equal(e.targets, d.targets)
    assert np.array_equal(e.folds, d.folds) and e.pad_dim == 4
    text = dataset_to_csv(d)
    assert text.splitlines()[0].endswith("f15,target,fold") and "\r\n" in text
    save_npz(d, tmp_path / "d.npz")
    f = load_npz(tmp_path / "d.npz")
    assert np.array_equal(f.features, d.features) and f.pad_dim == 4
    save_npz(d, tmp_path / "e.npz")
    assert (tmp_path / "d.npz").read_bytes() == (tmp_path / "e.npz").read_bytes()
    with pytest.raises(KeyError):
        load_csv(tmp_path / "d.csv", target_column="label")


def test_float_targets_round_trip(tmp_path):
    d = build_dataset([families.cycle(4), families.path(2)], [0.25, 1.5], 4, seed=2)
    save_csv(d, tmp_path / "r.csv")
    back = load_csv(tmp_path / "r.csv")
    assert back.targets.dtype.kind == "f" and sorted(back.targets.tolist()) == [0.25, 1.5]


# ---------------------------------------------------------------- logistic regression


def _blobs(seed, n=120, overlap=1.0):
    rng = np.random.default_rng(seed)
    x0 = rng.normal(0, overlap, size=(n // 2, 3))
    x1 = rng.normal(1.5, overlap, size=(n // 2, 3))
    return np.vstack([x0, x1]), np.array([0] * (n // 2) + [1] * (n // 2))


def test_logistic_separates_separable_data():
    x, y = _blobs(0, overlap=0.1)
    m = LogisticRegression().fit(x, y)
    assert (m.predict(x) == y).all()
    assert np.allclose(m.predict_proba(x).sum(axis=1), 1)


def test_logistic_duplicate_feature_without_penalty():
    x, y = _blobs(1)
    a = LogisticRegression(alpha=0.0, max_iter=20000, tol=1e-9).fit(x, y)
    b = LogisticRegression(alpha=0.0, max_iter=20000, tol=1e-9).fit(np.hstack([x, x[:, :1]]), y)
    pa = a.predict_proba(x)
    pb = b.predict_proba(np.hstack([x, x[:, :1]]))
    assert np.allclose(pa, pb, atol=1e-4)
    assert b.coef_[:, 0] == pytest.approx(b.coef_[:, 3])


def test_logistic_constant_columns_get_zero_weight():
    x, y = _blobs(2)
    xc = np.hstack([x, np.full((len(x), 1), 7.0)])
    m = LogisticRegression().fit(xc, y)
    assert np.all(m.coef_[:, 3] == 0)


def test_logistic_errors():
    with pytest.raises(ValueError):
        LogisticRegression().fit(np.ones((3, 2)), [1, 1, 1])
    m = LogisticRegression().fit(*_blobs(3))
    with pytest.raises(ValueError):
        m.predict(np.ones((2, 5)))


def test_logistic_three_classes():
    rng = np.random.default_rng(4)
    centres = np.array([[0, 0], [4, 0], [0, 4]])
    y = np.repeat([0, 1, 2], 40)
    x = centres[y] + rng.normal(0, 0.5, size=(120, 2))
    assert p_n(confusion_matrix(y, LogisticRegression().fit(x, y).predict(x))) > 0.95


# ---------------------------------------------------------------- trees


def test_tree_memorises_distinct_rows():
    rng = np.random.default_rng(0)
    x = rng.integers(0, 2, size=(80, 12)).astype(float)
    x = np.unique(x, axis=0)
    y = rng.integers(0, 3, size=len(x))
    assert (DecisionTreeClassifier().fit(x, y).predict(x) == y).all()


def test_tree_depth_cap_and_forest_reproducibility():
    x, y = _blobs(5)
    stump = DecisionTreeClassifier(max_depth=1).fit(x, y)
    assert len(np.unique(stump.predict_proba(x), axis=0)) <= 2
    f1 = RandomForestClassifier(n_estimators=10, random_state=3).fit(x, y)
    f2 = RandomForestClassifier(n_estimators=10, random_state=3).fit(x, y)
    assert np.array_equal(f1.predict_proba(x), f2.predict_proba(x))
    assert p_n(confusion_matrix(y, f1.predict(x))) > 0.9


def test_make_learner():
    assert isinstance(make_learner("boosted"), RandomForestClassifier)
    with pytest.raises(ValueError):
        make_learner("svm")


# ---------------------------------------------------------------- MLP


def test_mlp_gradients_match_finite_differences():
    rng = np.random.default_rng(0)
    spec = MlpSpec(input_dim=6, hidden1=7, hidden2=4)
    x, t = rng.normal(size=(9, 6)), rng.normal(size=9)
    for tanh_output in (False, True):
        params = init_params(spec, rng)
        _, grads = loss_and_grad(params, x, t, tanh_output)
        h = 1e-6
        for name, p in params.items():
            for idx in np.ndindex(p.shape):
                old = p[idx]
                p[idx] = old + h
                up, _ = loss_and_grad(params, x, t, tanh_output)
                p[idx] = old - h
                down, _ = loss_and_grad(params, x, t, tanh_output)
                p[idx] = old
                assert abs((up - down) / (2 * h) - grads[name][idx]) < 1e-4


def test_mlp_zero_init_keeps_hidden_units_tied():
    rng = np.random.default_rng(1)
    x, t = rng.normal(size=(40, 5)), rng.normal(size=40)
    p = init_params(MlpSpec(5, 6, 3), rng, "zeros")
    y, _ = forward(p, x, False)
    assert np.all(y == 0)
    _, g = loss_and_grad(p, x, t)
    assert np.all(g["W1"] == 0) and np.all(g["b1"] == 0)
    m = MLPRegressor(hidden1=6, hidden2=3, init="zeros", epochs=5).fit(x, t)
    w1 = m.params_["W1"]
    assert np.allclose(w1, w1[:, :1])
    with pytest.raises(ValueError):
        init_params(MlpSpec(5, 6, 3), rng, "he")
    with pytest.raises(ValueError):
        MlpSpec(0, 3, 3)


def test_mlp_fits_a_linear_target():
    rng = np.random.default_rng(2)
    x = rng.integers(0, 2, size=(400, 9)).astype(float)
    t = x.sum(axis=1) / 3
    m = MLPRegressor(hidden1=30, hidden2=10, epochs=150, lr=3e-3).fit(x, t)
    assert linear_fit(m.predict(x), t).r2 > 0.95


# ---------------------------------------------------------------- evaluation


def test_summarize_is_order_independent():
    s = summarize([0.2, 0.4, 0.9])
    assert s.mean == pytest.approx(0.5) and s.std == pytest.approx(np.std([0.2, 0.4, 0.9], ddof=1))
    assert summarize([0.3]).std == 0.0
    assert str(summarize([1.0, 1.0])) == "1.000 ± 0.000"


def test_cross_validate_and_training_curve():
    x, y = _blobs(6, n=100)
    from graphgeom.learn.dataset import Dataset
    d = Dataset(x, y, sequential_folds(len(y)), 0, 0, {})
    scores = cross_validate(d, lambda: LogisticRegression())
    assert set(scores) == {"P_N", "phi", "F1"} and scores["P_N"].mean > 0.7
    curve = training_curve(d, lambda: LogisticRegression(), fractions=(20, 80), repeats=2)
    assert list(curve) == [20, 80]
    reg = evaluate(MLPRegressor(hidden1=8, hidden2=4, epochs=3), *random_split(
        Dataset(x, x.sum(axis=1), sequential_folds(len(y)), 0, 0, {}), 0.5, 0))
    assert set(reg) == {"a", "c", "R2"}


def test_pca_recovers_dominant_direction():
    rng = np.random.default_rng(7)
    t = rng.normal(size=200)
    pts = np.outer(t, [3.0, 4.0, 0.0]) + rng.normal(scale=0.01, size=(200, 3))
    res = pca_project(pts, 2)
    assert res.projected.shape == (200, 2)
    assert np.allclose(res.components[0], [0.6, 0.8, 0.0], atol=1e-3)
    assert res.explained_variance_ratio[0] > 0.99
    with pytest.raises(ValueError):
        pca_project(pts, 4)
    with pytest.raises(ValueError):
        pca_project(pts[:1], 1)


def test_task_recipes_exist():
    assert {"acyclic", "planar", "olly_flat", "cd_flat", "random_control"} <= set(tasks.RECIPES)
    assert tasks.RECIPES["random_control"].random_labels
