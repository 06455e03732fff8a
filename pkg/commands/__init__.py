from .verify_commands import verify
from .coend_commands import coend, opposite
from .eval_commands import evaluate
from .demo_commands import demo

__all__ = ["verify", "coend", "opposite", "evaluate", "demo"]
