"""HTTP bridge serving transformer perplexity and pseudo-perplexity."""

from .app import create_app
from .scoring import BridgeModel, load_bridge_model

__version__ = "0.1.0"

__all__ = ["BridgeModel", "create_app", "load_bridge_model"]
