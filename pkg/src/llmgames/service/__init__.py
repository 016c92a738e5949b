"""HTTP/JSON session service for both games."""

from llmgames.service.store import SessionStore
from llmgames.service.app import ServiceConfig, create_app

__all__ = ["SessionStore", "ServiceConfig", "create_app"]
