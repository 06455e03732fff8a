from .errors import ShcError

__all__ = ["ShcError"]
