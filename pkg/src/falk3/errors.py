"""Exception types shared across the package."""


class FalkError(Exception):
    """Base class for every error this package raises deliberately."""


class DuplicateEdge(FalkError):
    """The same signed edge (or loop) appears twice in one edge list."""


class SelfPairEdge(FalkError):
    """A positive or negative edge joins a vertex to itself."""


class VertexOutOfRange(FalkError):
    """An edge references a vertex outside 1..ell."""


class LabelOutOfRange(FalkError):
    """A hyperplane label outside 1..n was requested."""


class NotACycle(FalkError):
    """The given labels do not form a closed walk of non-loop edges."""


class UnderlyingGraphMismatch(FalkError):
    """Switching equivalence asked for graphs with different underlying multigraphs."""


class B2Present(FalkError):
    """The operation needs a graph with no B2 sub-arrangement (doubled pair plus both loops)."""


class InternalKindMismatch(FalkError):
    """Rank-based and pattern-based dependent-triple enumeration disagreed."""


class RankMismatch(FalkError):
    """An exact rank disagreed with a value it must equal by construction."""


class ParseError(FalkError):
    """Malformed graph file; carries the 1-based offending line number."""

    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no
