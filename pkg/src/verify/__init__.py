"""Verification of closed forms against the BFS/Jacobi oracle."""

from src.verify.chain import ChainEvaluation, conclusion_chain_report, evaluate_chain
from src.verify.checks import verify_bounds, verify_energy, verify_identities, verify_spectrum
from src.verify.report import CheckKind, Status, VerificationReport
from src.verify.scan import ScanSummary

__all__ = [
    "ChainEvaluation",
    "CheckKind",
    "ScanSummary",
    "Status",
    "VerificationReport",
    "conclusion_chain_report",
    "evaluate_chain",
    "verify_bounds",
    "verify_energy",
    "verify_identities",
    "verify_spectrum",
]
