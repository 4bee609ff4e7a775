"""Verification and exclusion toolkit for tight spherical 5- and 7-designs."""

__version__ = "0.1.0"
