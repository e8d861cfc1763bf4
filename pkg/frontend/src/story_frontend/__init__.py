"""story-frontend: annotation and knowledge services for story2pddl."""

from .annotate import annotate
from .config import FrontendConfig
from .fixtures import export_fixtures
from .server import create_app

__version__ = "0.1.0"

__all__ = ["FrontendConfig", "annotate", "create_app", "export_fixtures"]
