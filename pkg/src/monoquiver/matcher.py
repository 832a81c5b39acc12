"""Multi-pattern factor automaton over an arrow alphabet.

An Aho-Corasick automaton whose alphabet is arrow ids rather than
characters. A state is accepting once some pattern ends at the current
position, so a word is pattern-free iff its run never accepts.
"""
from __future__ import annotations

from collections import deque


class FactorAutomaton:
    ROOT = 0

    def __init__(self, patterns):
        self.patterns = [tuple(p) for p in patterns]
        self._goto = [{}]
        self._fail = [0]
        self._depth = [0]
        # index of the shortest pattern that is a suffix of the state's label
        self._match = [None]
        for index, pattern in enumerate(self.patterns):
            if not pattern:
                raise ValueError("empty pattern")
            state = 0
            for symbol in pattern:
                nxt = self._goto[state].get(symbol)
                if nxt is None:
                    nxt = len(self._goto)
                    self._goto[state][symbol] = nxt
                    self._goto.append({})
                    self._fail.append(0)
                    self._depth.append(self._depth[state] + 1)
                    self._match.append(None)
                state = nxt
            current = self._match[state]
            if current is None or len(self.patterns[current]) > len(pattern):
                self._match[state] = index
        self._link()
        self._delta = {}

    def _link(self):
        queue = deque(self._goto[0].values())
        while queue:
            state = queue.popleft()
            for symbol, child in self._goto[state].items():
                queue.append(child)
                f = self._fail[state]
                while f and symbol not in self._goto[f]:
                    f = self._fail[f]
                target = self._goto[f].get(symbol, 0)
                self._fail[child] = target if target != child else 0
                found = [m for m in (self._match[child], self._match[self._fail[child]])
                         if m is not None]
                if found:
                    self._match[child] = min(found, key=lambda m: len(self.patterns[m]))

    def __len__(self):
        return len(self._goto)

    def step(self, state, symbol):
        key = (state, symbol)
        cached = self._delta.get(key)
        if cached is not None:
            return cached
        s = state
        while s and symbol not in self._goto[s]:
            s = self._fail[s]
        nxt = self._goto[s].get(symbol, 0)
        self._delta[key] = nxt
        return nxt

    def accepting(self, state):
        return self._match[state] is not None

    def matched(self, state):
        """Index of a pattern ending at this state, or None."""
        return self._match[state]

    def run(self, symbols, state=ROOT):
        for symbol in symbols:
            state = self.step(state, symbol)
        return state

    def first_match(self, symbols, state=ROOT):
        """``(end, pattern_index)`` for the earliest-ending occurrence, or None."""
        for position, symbol in enumerate(symbols):
            state = self.step(state, symbol)
            if self._match[state] is not None:
                return position + 1, self._match[state]
        return None

    def contains_any(self, symbols):
        return self.first_match(symbols) is not None
