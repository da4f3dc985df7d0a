"""Dataset assembly, learners, metrics and experiment recipes."""

from .dataset import Dataset, build_dataset, kfold, random_split
from .evaluation import cross_validate, make_learner, pca_project, training_curve
from .linear import LogisticRegression
from .metrics import confusion_matrix, linear_fit, matthews_phi, metrics
from .mlp import MLPRegressor
from .tree import DecisionTreeClassifier, RandomForestClassifier

__all__ = ["Dataset", "build_dataset", "kfold", "random_split", "cross_validate", "make_learner",
           "pca_project", "training_curve", "LogisticRegression", "confusion_matrix", "linear_fit",
           "matthews_phi", "metrics", "MLPRegressor", "DecisionTreeClassifier", "RandomForestClassifier"]
