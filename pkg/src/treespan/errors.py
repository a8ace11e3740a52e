"""Exception types shared across the package."""


class GraphError(ValueError):
    """Malformed graph input."""


class LoopEdge(GraphError):
    pass


class VertexOutOfRange(GraphError):
    pass


class Disconnected(GraphError):
    pass


class NotSpanningTree(GraphError):
    pass


class InstanceTooLarge(ValueError):
    """An exhaustive oracle was asked to run above its size cap."""


class NotOuterplanar(ValueError):
    """Raised with a reason token naming the failed check.

    Tokens: ``TooManyEdges``, ``NoDegree2Vertex``, ``NotHamiltonian``,
    ``CrossingChords``, ``NotBiconnected``.
    """

    def __init__(self, reason, detail=""):
        self.reason = reason
        super().__init__(f"{reason}: {detail}" if detail else reason)


class NotACycle(ValueError):
    pass


class Infeasible(Exception):
    """No supply-demand partition exists; ``node`` is where supply ran out."""

    def __init__(self, node):
        self.node = node
        super().__init__(f"supply exhausted at node {node}")


class PreconditionViolated(ValueError):
    pass


class InvalidPartition(ValueError):
    def __init__(self, violation):
        self.violation = violation
        super().__init__(str(violation))


class ParseError(ValueError):
    def __init__(self, line, message):
        self.line = line
        super().__init__(f"line {line}: {message}")
