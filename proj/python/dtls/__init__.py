"""Probe reflection and transmission of a four-level medium driven by a standing-wave control."""

from ._dtls import *  # noqa: F401,F403
from ._dtls import __doc__  # noqa: F401
