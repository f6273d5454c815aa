"""
Custom exceptions for the diamgraph project
"""

class DiamgraphError(Exception):
    """Base exception for all diamgraph-specific errors"""
    pass

class InvalidInputError(DiamgraphError, ValueError):
    """Raised when invalid input is provided (domain errors included)"""
    pass

class ConfigValidationError(DiamgraphError):
    """Raised when configuration validation fails"""
    pass

class DegenerateSetError(InvalidInputError):
    """Raised when a point set has fewer than two distinct points"""
    pass

class DegenerateCapError(DiamgraphError):
    """Raised when a point set is not confined to any hemisphere"""

    def __init__(self, message: str, ball_radius: float):
        super().__init__(message)
        self.ball_radius = ball_radius

class ArcOverlapError(DiamgraphError):
    """Raised when two arcs on one great circle overlap in a segment"""
    pass

class HemisphereError(InvalidInputError):
    """Raised when generators do not lie in an open hemisphere"""
    pass

class ProjectionDegeneracyError(DiamgraphError):
    """Raised when a vertex lies on the diametral sphere"""
    pass

class SizeCapError(DiamgraphError):
    """Raised when an exhaustive search would exceed its size cap"""

    def __init__(self, message: str, cap: int):
        super().__init__(message)
        self.cap = cap

class TheoremPreconditionError(DiamgraphError):
    """Raised when an instance lies outside a theorem's hypotheses"""

    def __init__(self, message: str, sample=None):
        super().__init__(message)
        self.sample = sample

class Lemma5ViolationError(DiamgraphError):
    """Raised when the double cover is requested for violating projections"""
    pass

class VerificationFailure(DiamgraphError):
    """Raised when a proven claim fails on an in-hypothesis instance"""
    pass
