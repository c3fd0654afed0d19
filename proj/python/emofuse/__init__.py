"""Fuzzy fusion of audio/video emotion intensity streams with session analytics."""

from ._core import (
    InferenceSystem,
    fuse_intensity,
    fuse_streams,
    report_streams,
    simulate,
    __version__,
)

__all__ = [
    "InferenceSystem",
    "fuse_intensity",
    "fuse_streams",
    "report_streams",
    "simulate",
    "__version__",
]
