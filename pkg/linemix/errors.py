"""
File: linemix/errors.py

Project: linemix

Purpose:
Single exception hierarchy for the package.
Library code raises these; only linemix.main turns them into exit codes.
"""

from __future__ import annotations


class LineMixError(RuntimeError):
    pass


class ConfigError(LineMixError):
    pass


class DatasetError(LineMixError):
    pass


class ModelError(LineMixError):
    pass


class InitializationError(LineMixError):
    def __init__(self, component: int, detail: str) -> None:
        super().__init__(f"initialization degenerated at component {component}: {detail}")
        self.component = component


class EmptyComponentError(LineMixError):
    """
    Raised by the M-step when a component has (almost) no responsibility mass
    or no spread in x. fit_em catches it and re-seeds the component.
    component is 1-based, as in InitializationError.
    """

    def __init__(self, component: int, detail: str) -> None:
        super().__init__(f"component {component} is empty: {detail}")
        self.component = component


class FitAbortedError(LineMixError):
    pass


class OrderSelectionError(LineMixError):
    pass


class ScenarioError(LineMixError):
    pass


class CsvFormatError(LineMixError):
    def __init__(self, line_number: int, detail: str) -> None:
        super().__init__(f"line {line_number}: {detail}")
        self.line_number = line_number
