"""
Verifiers package: one worker class per group of checks
"""
from .base_verifier import BaseVerifier
from .strip_domain_verifier import StripDomainVerifier
from .extremal_verifier import ExtremalVerifier
from .radius_verifier import RadiusVerifier
from .hankel_verifier import HankelVerifier

REGISTRY = {
    StripDomainVerifier.name: StripDomainVerifier,
    ExtremalVerifier.name: ExtremalVerifier,
    RadiusVerifier.name: RadiusVerifier,
    HankelVerifier.name: HankelVerifier,
}

__all__ = ["BaseVerifier", "StripDomainVerifier", "ExtremalVerifier", "RadiusVerifier", "HankelVerifier", "REGISTRY"]
