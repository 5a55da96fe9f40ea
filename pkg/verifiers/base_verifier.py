"""
Base Verifier class for all verifiers
"""
import logging
import time
from abc import ABC, abstractmethod
from typing import Any, Callable, Dict, List, Optional, Union

logger = logging.getLogger(__name__)

Claim = Union[float, bool, None]


class BaseVerifier(ABC):
    """
    Abstract base class for all verifiers.
    Each verifier runs one group of checks and returns report items.
    """

    name = "base"
    section = ""

    def __init__(self, config: Dict[str, Any] = None):
        """
        Initialize the verifier with optional configuration.

        Args:
            config: Dictionary containing verifier-specific configuration;
                "tolerances" maps item names to overriding tolerances
        """
        self.config = config or {}
        self.items: List[Dict[str, Any]] = []

    def tolerance(self, item: str, default: float) -> float:
        """Override by full item name ("radius.convexity_radius.gamma_0") or by the short one."""
        overrides = self.config.get("tolerances", {})
        return float(overrides.get(f"{self.name}.{item}", overrides.get(item, default)))

    def check(
        self,
        item: str,
        compute: Callable[[], Claim],
        expected: Claim = True,
        tol: float = 0.0,
        printed: Optional[float] = None,
        note: str = "",
        section: str = None,
    ) -> Dict[str, Any]:
        """
        Run one check and record it.

        ``compute`` returns a number (compared with ``expected`` within the
        tolerance) or a boolean claim (compared for equality). Exceptions are
        caught and recorded as failures, so one item never aborts the run.
        """
        tol = self.tolerance(item, tol)
        started = time.perf_counter()
        record = {
            "name": f"{self.name}.{item}",
            "section": section or self.section,
            "paper_value": expected,
            "computed_value": None,
            "tolerance": tol,
            "printed_value": printed,
            "note": note,
        }
        try:
            computed = compute()
            if isinstance(computed, bool) or isinstance(expected, bool):
                passed = bool(computed) == bool(expected)
                computed = bool(computed)
            else:
                computed = float(computed)
                passed = abs(computed - float(expected)) <= tol
            record["computed_value"] = computed
            record["status"] = "pass" if passed else "fail"
        except Exception as e:
            logger.warning("%s.%s raised %s: %s", self.name, item, type(e).__name__, e)
            record["status"] = "fail"
            record["note"] = f"{type(e).__name__}: {e}"
        record["runtime_ms"] = (time.perf_counter() - started) * 1000.0
        if record["status"] == "fail":
            logger.warning("FAIL %s: expected %s, got %s", record["name"], expected, record["computed_value"])
        self.items.append(record)
        return record

    def skip(self, item: str, expected: Claim, note: str) -> None:
        self.items.append(
            {
                "name": f"{self.name}.{item}",
                "section": self.section,
                "paper_value": expected,
                "computed_value": None,
                "tolerance": 0.0,
                "printed_value": None,
                "note": note,
                "status": "skip",
                "runtime_ms": 0.0,
            }
        )

    def process(self) -> Dict[str, Any]:
        """
        Run every check of this verifier.

        Returns:
            Dictionary containing:
                - ok: True when no item failed
                - items: List of item records
                - error: Error message if the run itself broke
        """
        self.items = []
        try:
            self.run()
        except Exception as e:
            logger.exception("verifier %s aborted", self.name)
            return {"ok": False, "items": self.items, "error": str(e)}
        return {"ok": all(item["status"] != "fail" for item in self.items), "items": self.items}

    @abstractmethod
    def run(self) -> None:
        """
        Record the items of this verifier through :meth:`check`.
        This method must be implemented by all verifiers.
        """
        pass

    @abstractmethod
    def get_info(self) -> Dict[str, Any]:
        """
        Return information about the verifier's checks and configuration.
        """
        pass
