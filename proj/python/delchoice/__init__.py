"""Python bindings for the delegated choice simulation engine."""

from ._delchoice import *  # noqa: F401,F403
