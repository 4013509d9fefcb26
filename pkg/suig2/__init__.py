"""
suig2 - two-stab unit-square intersection graphs of trees.

Decides whether a tree is the intersection graph of closed unit squares
that each meet one of two horizontal stab lines, and builds an exact
representation when it is.
"""

__version__ = "1.0.0"
__license__ = "AGPL-3.0"

from suig2.recognizer.service import Decision, RecognizerService, recognize

__all__ = ["Decision", "RecognizerService", "recognize", "__version__"]
