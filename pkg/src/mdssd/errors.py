"""Exception hierarchy shared by all modules."""

from __future__ import annotations


class MdssdError(Exception):
    """Base class for all package errors."""


# --- field construction / arithmetic ---

class NonPrime(MdssdError):
    def __init__(self, p: int):
        super().__init__(f"{p} is not prime")
        self.p = p


class EvenCharacteristic(MdssdError):
    def __init__(self, p: int = 2):
        super().__init__("characteristic 2 is out of scope (odd characteristic only)")
        self.p = p


class DegreeZero(MdssdError):
    def __init__(self):
        super().__init__("extension degree must be >= 1")


class FieldTooLarge(MdssdError):
    def __init__(self, q: int, budget: int):
        super().__init__(f"q = {q} exceeds the field materialization budget {budget}")
        self.q = q
        self.budget = budget


class DivisionByZero(MdssdError):
    def __init__(self):
        super().__init__("division by zero field element")


class ZeroToNegativePower(MdssdError):
    def __init__(self):
        super().__init__("zero cannot be raised to a negative power")


class NotASquare(MdssdError):
    def __init__(self, value: int):
        super().__init__(f"element with encoding {value} is not a square")
        self.value = value


class ZeroElement(MdssdError):
    def __init__(self):
        super().__init__("the zero element has no multiplicative order")


class NotDividing(MdssdError):
    def __init__(self, m: int, modulus: int):
        super().__init__(f"{m} does not divide {modulus}")
        self.m = m
        self.modulus = modulus


class NotASubfield(MdssdError):
    def __init__(self, sub_q: int, q: int):
        super().__init__(f"{sub_q} does not define a subfield of the field with {q} elements")
        self.sub_q = sub_q
        self.q = q


# --- code assembly ---

class IndexOutOfRange(MdssdError, IndexError):
    pass


class DimensionMismatch(MdssdError):
    pass


class DuplicatePoint(MdssdError):
    def __init__(self):
        super().__init__("evaluation points must be pairwise distinct")


class OddLength(MdssdError):
    def __init__(self, n: int):
        super().__init__(f"self-dual codes require even length, got n = {n}")
        self.n = n


class SquareConditionViolated(MdssdError):
    def __init__(self, index: int):
        super().__init__(f"square condition fails at evaluation point index {index}")
        self.index = index


# --- constructions ---

class HypothesisViolated(MdssdError):
    def __init__(self, clause: str):
        super().__init__(f"hypothesis violated: {clause}")
        self.clause = clause


class NotEnoughCosets(MdssdError):
    def __init__(self, wanted: int, available: int):
        super().__init__(f"needed {wanted} coset representatives, only {available} exist")
        self.wanted = wanted
        self.available = available


class ParityInfeasible(MdssdError):
    def __init__(self, detail: str):
        super().__init__(f"no representative set with the required parity: {detail}")


class TooLargeToMaterialize(MdssdError):
    def __init__(self, n: int, budget: int):
        super().__init__(f"parameters are valid but n = {n} exceeds the build budget {budget}")
        self.n = n
        self.budget = budget


class UnsupportedTheorem(MdssdError):
    def __init__(self, theorem: str):
        super().__init__(f"no closed-form locator for construction {theorem!r}")
        self.theorem = theorem


# --- verification ---

class TooLarge(MdssdError):
    def __init__(self, detail: str):
        super().__init__(f"verification budget exceeded: {detail}")


# --- census ---

class EvenQ(MdssdError):
    def __init__(self, q: int):
        super().__init__(f"census requires an odd prime power, got q = {q}")
        self.q = q


class BudgetExceeded(MdssdError):
    def __init__(self, q: int, budget: int):
        super().__init__(f"q = {q} exceeds the census budget {budget}")


class SpotCheckFailed(MdssdError):
    def __init__(self, n: int, detail: str):
        super().__init__(f"claimed length n = {n} could not be realized: {detail}")
        self.n = n
        self.detail = detail
