"""LangGraph pipelines: per-word cross-check and the acceptance suite."""

from .cross_check_workflow import CrossCheckWorkflow, create_cross_check_workflow
from .global_state import CrossCheckState, VerificationState
from .verification_workflow import Scale, VerificationWorkflow, create_verification_workflow

__all__ = [
    "CrossCheckState",
    "CrossCheckWorkflow",
    "Scale",
    "VerificationState",
    "VerificationWorkflow",
    "create_cross_check_workflow",
    "create_verification_workflow",
]
