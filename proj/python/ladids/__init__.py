from ._core import (
    ConfigError,
    DataError,
    Dataset,
    FeatureSchema,
    Model,
    ModelError,
    ParseError,
    PipelineConfig,
    __version__,
    evaluate,
    load_csv,
    make_dataset,
    make_schema,
    self_label,
    split_random,
    train_offline,
)

__all__ = [
    "ConfigError",
    "DataError",
    "Dataset",
    "FeatureSchema",
    "Model",
    "ModelError",
    "ParseError",
    "PipelineConfig",
    "__version__",
    "evaluate",
    "load_csv",
    "make_dataset",
    "make_schema",
    "self_label",
    "split_random",
    "train_offline",
]
