"""Divisibility-ordered transaction tree (PC-tree).

Each inserted transaction becomes (or bumps) one node keyed by its prime-coded
value. Every child's value divides its parent's value, so each root-to-leaf
path is a strictly descending divisibility chain and the root's children, the
heads, are the values nothing inserted so far fits under. Support queries sum
local counts over nodes the query value divides, skipping a whole subtree as
soon as its top value fails the test: descendant values divide their
ancestors', so non-divisibility propagates all the way down.

A node's global_count caches the local counts along its own root path. It is
maintained for every insertion and checked by validate(), but support() does
not use it: the same query value can divide nodes on several branches, and
path-local sums cannot see across branches.
"""

from __future__ import annotations

from math import gcd
from typing import Iterable

from .baselines import TransactionDB
from .prime_codec import Itemset, PrimeTable, as_itemset, build_prime_table, encode


class PCNode:
    """One distinct transaction value and where it sits in the tree."""

    __slots__ = ("value", "items", "local_count", "global_count", "children", "parent", "birth")

    def __init__(self, value, items, birth, parent=None):
        self.value = value
        self.items = items  # cached factorization of value; must stay in agreement
        self.local_count = 1
        self.global_count = 0
        self.children: list[PCNode] = []
        self.parent = parent
        self.birth = birth  # creation index; breaks placement ties deterministically

    def __repr__(self):
        return f"PCNode({self.value}, local={self.local_count}, global={self.global_count})"


class PCTree:
    """Prime-coded transaction tree built in one pass over a database.

    The tree is meant to be fully built before it is queried; support() and
    the frequency table are plain reads afterwards, so concurrent queries are
    safe. Pass keep_transactions=True to retain the raw itemset multiset for
    oracle checks in tests; production builds can leave it off.
    """

    def __init__(self, prime_table: PrimeTable, keep_transactions: bool = False):
        self.prime_table = prime_table
        self.root = PCNode(None, (), birth=0)
        self.root.local_count = 0
        self.frequency_table: dict[int, int] = dict.fromkeys(prime_table.item_ids, 0)
        self.transaction_count = 0
        self.transactions: list[Itemset] | None = [] if keep_transactions else None
        self._node_by_value: dict[int, PCNode] = {}
        self._births = 0

    @property
    def node_count(self) -> int:
        """Number of distinct transaction values stored."""
        return len(self._node_by_value)

    def insert(self, items: Iterable[int]) -> None:
        """Ingest one transaction.

        A value already present anywhere in the tree only bumps that node's
        local count (values are unique tree-wide). Otherwise the root
        subtrees are scanned in creation order and the value lands in the
        first one it is comparable with: below the deepest node it divides,
        or at the top when it only has divisors in there, adopting the root
        children that divide it (this is how a new superset replaces a head).
        No comparable subtree at all makes it a fresh head.
        """
        x = as_itemset(items)
        if not x:
            raise ValueError("empty transactions carry no pattern information")
        value = encode(x, self.prime_table)
        for item in x:
            self.frequency_table[item] += 1
        self.transaction_count += 1
        if self.transactions is not None:
            self.transactions.append(x)

        node = self._node_by_value.get(value)
        if node is not None:
            node.local_count += 1
            self._refresh_global(node)
            return

        head = self._accepting_head(value)
        if head is not None and head.value % value == 0:
            parent = self._deepest_multiple(head, value)
        else:
            parent = self.root
        self._births += 1
        node = PCNode(value, x, birth=self._births, parent=parent)
        moved = [c for c in parent.children if value % c.value == 0]
        for child in moved:
            parent.children.remove(child)
            child.parent = node
        node.children = moved
        parent.children.append(node)
        self._node_by_value[value] = node
        self._refresh_global(node)

    def _accepting_head(self, value: int) -> PCNode | None:
        """First root child (creation order) whose subtree is comparable with value.

        A subtree holds a multiple of value iff its head is one, since every
        node's ancestors are multiples of it. Divisors of value can hide at
        any depth, but a branch whose top shares no factor with value cannot
        contain one (everything below divides that top), so it is skipped.
        """
        for head in self.root.children:
            if head.value % value == 0:
                return head
            stack = [head]
            while stack:
                node = stack.pop()
                if value % node.value == 0:
                    return head
                if gcd(node.value, value) > 1:
                    stack.extend(node.children)
        return None

    def _deepest_multiple(self, head: PCNode, value: int) -> PCNode:
        """Deepest node under head whose value is a multiple; oldest wins ties."""
        best, best_depth = head, 0
        stack = [(head, 0)]
        while stack:
            node, depth = stack.pop()
            if depth > best_depth or (depth == best_depth and node.birth < best.birth):
                best, best_depth = node, depth
            for child in node.children:
                if child.value % value == 0:
                    stack.append((child, depth + 1))
        return best

    def _refresh_global(self, node: PCNode) -> None:
        # global_count = own local count + parent's global count, root = 0
        base = 0 if node.parent is self.root else node.parent.global_count
        node.global_count = node.local_count + base
        for child in node.children:
            self._refresh_global(child)

    def heads(self) -> tuple[int, ...]:
        """Values of the root's children, in creation order."""
        return tuple(child.value for child in self.root.children)

    def support(self, value: int) -> int:
        """Number of ingested transactions whose itemset contains value's itemset."""
        if value < 1:
            raise ValueError(f"transaction values are positive, got {value}")
        total = 0
        stack = list(self.root.children)
        while stack:
            node = stack.pop()
            if node.value % value == 0:
                total += node.local_count
                stack.extend(node.children)
            # otherwise no descendant can be a multiple either: skip the branch
        return total

    def item_frequencies(self) -> dict[int, int]:
        """Copy of the per-item transaction counts maintained during insertion."""
        return dict(self.frequency_table)

    def validate(self, deep: bool = True) -> list[str]:
        """Check tree invariants; returns one message per violation, empty when sound.

        The structural checks (counts, global recurrence, divisibility
        chains, tree-wide value uniqueness) are linear in the tree. deep=True
        additionally cross-checks every node's cached factor set and the item
        frequency table against divisibility queries.
        """
        problems = []
        seen: dict[int, PCNode] = {}
        local_sum = 0
        stack: list[PCNode] = [self.root]
        while stack:
            node = stack.pop()
            for child in node.children:
                if child.parent is not node:
                    problems.append(f"node {child.value}: parent link does not match tree shape")
                stack.append(child)
            if node is self.root:
                continue
            if node.local_count < 1:
                problems.append(f"node {node.value}: local_count {node.local_count} < 1")
            local_sum += node.local_count
            parent = node.parent
            parent_global = 0 if parent is self.root else parent.global_count
            if node.global_count != node.local_count + parent_global:
                problems.append(
                    f"node {node.value}: global_count {node.global_count} breaks the "
                    f"recurrence (local {node.local_count} + parent {parent_global})"
                )
            if parent is not self.root:
                if parent.value % node.value != 0:
                    problems.append(f"node {node.value} does not divide its parent {parent.value}")
                elif node.value >= parent.value:
                    problems.append(f"node {node.value} is not strictly below parent {parent.value}")
            if node.value in seen:
                problems.append(f"value {node.value} is stored in two nodes")
            else:
                seen[node.value] = node
        if local_sum != self.transaction_count:
            problems.append(
                f"local counts sum to {local_sum}, expected {self.transaction_count}"
            )
        if deep:
            for node in seen.values():
                if encode(node.items, self.prime_table) != node.value:
                    problems.append(
                        f"node {node.value}: cached items {node.items} disagree with the value"
                    )
            for item, count in self.frequency_table.items():
                got = self.support(self.prime_table.prime_for(item))
                if got != count:
                    problems.append(
                        f"item {item}: frequency table says {count}, tree queries say {got}"
                    )
            if self.transactions is not None and len(self.transactions) != self.transaction_count:
                problems.append("retained transaction list is out of step with the count")
        return problems


def build_tree(db: TransactionDB, keep_transactions: bool = False) -> PCTree:
    """One-pass tree construction over a whole database."""
    tree = PCTree(build_prime_table(db.universe), keep_transactions=keep_transactions)
    for _tid, items in db.transactions:
        tree.insert(items)
    return tree
