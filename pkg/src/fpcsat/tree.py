"""Binary tree over fully populated clauses with OPEN/NULL pointer states.

Each node carries a variable index; its left edge stands for the negative
literal, its right edge for the positive one.  A pointer is either OPEN (an
insertion point for the next variable, and at the same time a surviving
clause path), NULL (the subtree was eliminated because the formula contains
a subset of every clause path through it), or a child node.  The path from
the root to any OPEN pointer spells a fully populated clause over the
variables registered so far; the root pointer itself spells the empty
clause.
"""

from __future__ import annotations

from .core import Clause


class _Sentinel:
    __slots__ = ("name",)

    def __init__(self, name: str):
        self.name = name

    def __repr__(self):
        return self.name


OPEN = _Sentinel("OPEN")
NULL = _Sentinel("NULL")

OK = "ok"
CLOSED = "closed"
BUDGET_EXCEEDED = "budget_exceeded"


class WorkLimitExceeded(Exception):
    """Internal signal: the configured work budget ran out mid-operation."""


class Node:
    __slots__ = ("var", "left", "right")

    def __init__(self, var: int):
        self.var = var
        self.left = OPEN
        self.right = OPEN


class UnregisteredVariableError(KeyError):
    pass


class DuplicateVariableError(ValueError):
    pass


class FpcTree:
    """Mutable single-owner tree; distinct instances are independent.

    ``node_budget`` caps live nodes (the structure's only memory hazard is
    its 2^n worst case).  ``work`` counts pointer visits across all
    operations; ``work_limit``, when set, aborts the current operation with
    WorkLimitExceeded once crossed, leaving the tree in an unspecified but
    safe-to-discard state.
    """

    def __init__(self, node_budget: int = 1 << 24, work_limit: int | None = None):
        if node_budget < 1:
            raise ValueError("node_budget must be >= 1")
        self.root = OPEN
        self.insertion_order: list[int] = []
        self.node_count = 0
        self.node_budget = node_budget
        self.open_count = 1
        self.peak_nodes = 0
        self.eliminations = 0
        self.work = 0
        self.work_limit = work_limit
        self._depth: dict[int, int] = {}

    def _tick(self, amount: int = 1) -> None:
        self.work += amount
        if self.work_limit is not None and self.work > self.work_limit:
            raise WorkLimitExceeded

    def is_closed(self) -> bool:
        return self.open_count == 0

    def is_registered(self, var: int) -> bool:
        return var in self._depth

    def register_variable(self, var: int) -> str:
        """Split every OPEN pointer with a fresh node for ``var``.

        Returns CLOSED when there is no insertion point left (the formula is
        already unsatisfiable) and BUDGET_EXCEEDED, with the tree untouched,
        when the insertion would overflow the node budget.
        """
        if var in self._depth:
            raise DuplicateVariableError(f"variable {var} already registered")
        if self.open_count == 0:
            return CLOSED
        if self.node_count + self.open_count > self.node_budget:
            return BUDGET_EXCEEDED

        new_nodes = self.open_count
        if self.root is OPEN:
            self.root = Node(var)
            self._tick()
        else:
            stack = [self.root]
            while stack:
                node = stack.pop()
                self._tick()
                for side in ("left", "right"):
                    child = getattr(node, side)
                    if child is OPEN:
                        setattr(node, side, Node(var))
                    elif child is not NULL:
                        stack.append(child)

        self._depth[var] = len(self.insertion_order)
        self.insertion_order.append(var)
        self.node_count += new_nodes
        self.open_count = new_nodes * 2
        if self.node_count > self.peak_nodes:
            self.peak_nodes = self.node_count
        return OK

    def _release(self, ptr) -> None:
        """Discard a detached subtree, updating node/open counts."""
        if ptr is OPEN:
            self.open_count -= 1
            return
        if ptr is NULL:
            return
        stack = [ptr]
        while stack:
            node = stack.pop()
            self._tick()
            self.node_count -= 1
            for side in (node.left, node.right):
                if side is OPEN:
                    self.open_count -= 1
                elif side is not NULL:
                    stack.append(side)

    def eliminate(self, c: Clause) -> None:
        """NULL every shallowest pointer whose path literals are a superset of ``c``.

        Pruning at the shallowest such pointer discards the whole dead
        subtree in one cut; deeper supersets are gone with it.
        """
        need: dict[int, int] = {}
        for lit in c:
            depth = self._depth.get(abs(lit))
            if depth is None:
                raise UnregisteredVariableError(f"variable {abs(lit)} not registered")
            if need.get(depth, lit) != lit:
                return  # tautology clause: no path holds both polarities
            need[depth] = lit

        if not need:
            # the empty clause is a subset of every path, root included
            root = self.root
            self.root = NULL
            if root is not NULL:
                self.eliminations += 1
            self._release(root)
            return
        if self.root is NULL or self.root is OPEN:
            return

        stack = [(self.root, 0, len(need))]
        while stack:
            node, depth, remaining = stack.pop()
            self._tick()
            lit = need.get(depth)
            for side in ("left", "right"):
                if lit is not None:
                    if (lit < 0) != (side == "left"):
                        continue
                    rest = remaining - 1
                else:
                    rest = remaining
                child = getattr(node, side)
                if child is NULL:
                    continue
                if rest == 0:
                    setattr(node, side, NULL)
                    self.eliminations += 1
                    self._release(child)
                elif child is not OPEN:
                    stack.append((child, depth + 1, rest))

    def open_fpcs(self) -> list[Clause]:
        """Surviving clause paths in left-to-right depth-first order (the
        negative branch of each node before the positive one)."""
        out: list[Clause] = []
        stack: list[tuple] = [(self.root, ())]
        while stack:
            ptr, path = stack.pop()
            self._tick()
            if ptr is OPEN:
                out.append(frozenset(path))
            elif ptr is not NULL:
                stack.append((ptr.right, path + (ptr.var,)))
                stack.append((ptr.left, path + (-ptr.var,)))
        return out

    def dump(self) -> str:
        """Indented text rendering, one node per line, for manual inspection."""
        lines: list[str] = []

        def describe(ptr) -> str:
            if ptr is OPEN:
                return "OPEN"
            if ptr is NULL:
                return "NULL"
            return "node"

        if self.root is OPEN or self.root is NULL:
            return f"root={describe(self.root)}\n"
        lines.append("root=node")
        stack = [(self.root, 1)]
        while stack:
            node, depth = stack.pop()
            indent = "  " * depth
            lines.append(
                f"{indent}x{node.var} left={describe(node.left)} right={describe(node.right)}"
            )
            if node.right is not OPEN and node.right is not NULL:
                stack.append((node.right, depth + 1))
            if node.left is not OPEN and node.left is not NULL:
                stack.append((node.left, depth + 1))
        return "\n".join(lines) + "\n"
