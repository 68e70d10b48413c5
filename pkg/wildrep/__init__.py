"""
Exact ℓ-adic Galois representations of elliptic curves over unramified
extensions of Q₃, with brute-force oracles for every numeric claim.
"""
import logging

from .settings import settings

__version__ = '1.0.0'

log = logging.getLogger(__name__)

__all__ = ['log', 'settings', '__version__']
