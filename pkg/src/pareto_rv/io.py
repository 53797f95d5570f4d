"""Text formats: ``SPGAME`` arenas and ``MOORE`` strategies.

SPGAME (line based, ``#`` starts a comment)::

    SPGAME 1
    VERTICES n
    OBJECTIVES t
    MAXPRIORITY d0 d1 ... dt
    INITIAL id
    V id owner p0 p1 ... pt      # one per vertex
    E src dst                    # one per edge, successor order is kept
    END

MOORE::

    MOORE 1
    STATES k
    INITIAL s
    T state vertex next_state
    C state vertex successor
    END
"""

from __future__ import annotations

from .arena import GameArena, MooreMachine, validate

__all__ = [
    "ParseError",
    "MAX_OBJECTIVES",
    "parse_arena",
    "write_arena",
    "read_arena",
    "parse_moore",
    "write_moore",
]

MAX_OBJECTIVES = 64


class ParseError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


def _lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line.split()


def _ints(tokens, lineno, what):
    try:
        return [int(x) for x in tokens]
    except ValueError:
        raise ParseError(f"{what}: expected integers, got {' '.join(tokens)!r}", lineno) from None


def parse_arena(text: str, check: bool = True) -> GameArena:
    """Parse an SPGAME document.

    With ``check`` the arena is validated after parsing and every violation
    is reported in one :class:`ParseError`.
    """
    header: dict[str, list[int]] = {}
    owner: dict[int, int] = {}
    prios: dict[int, tuple[int, ...]] = {}
    edges: list[tuple[int, int]] = []
    ended = False
    seen_magic = False
    for lineno, tok in _lines(text):
        key = tok[0]
        if ended:
            raise ParseError("content after END", lineno)
        if not seen_magic:
            if tok != ["SPGAME", "1"]:
                raise ParseError("expected 'SPGAME 1'", lineno)
            seen_magic = True
            continue
        if key in ("VERTICES", "OBJECTIVES", "INITIAL", "MAXPRIORITY"):
            if key in header:
                raise ParseError(f"duplicate {key}", lineno)
            vals = _ints(tok[1:], lineno, key)
            if key != "MAXPRIORITY" and len(vals) != 1:
                raise ParseError(f"{key} takes one integer", lineno)
            header[key] = vals
            if key == "OBJECTIVES" and not 1 <= vals[0] <= MAX_OBJECTIVES:
                raise ParseError(f"objective count must be in 1..{MAX_OBJECTIVES}", lineno)
        elif key == "V":
            if "OBJECTIVES" not in header or "VERTICES" not in header:
                raise ParseError("V before VERTICES/OBJECTIVES", lineno)
            t = header["OBJECTIVES"][0]
            vals = _ints(tok[1:], lineno, "V")
            if len(vals) != t + 3:
                raise ParseError(f"V needs id, owner and {t + 1} priorities", lineno)
            v, o, *ps = vals
            if not 0 <= v < header["VERTICES"][0]:
                raise ParseError(f"vertex id {v} out of range", lineno)
            if v in owner:
                raise ParseError(f"vertex {v} declared twice", lineno)
            if o not in (0, 1):
                raise ParseError("owner must be 0 or 1", lineno)
            if any(c < 0 for c in ps):
                raise ParseError("priorities must be nonnegative", lineno)
            owner[v] = o
            prios[v] = tuple(ps)
        elif key == "E":
            vals = _ints(tok[1:], lineno, "E")
            if len(vals) != 2:
                raise ParseError("E takes two vertex ids", lineno)
            edges.append((vals[0], vals[1]))
        elif key == "END":
            ended = True
        else:
            raise ParseError(f"unknown record {key!r}", lineno)
    if not seen_magic:
        raise ParseError("empty document")
    if not ended:
        raise ParseError("missing END")
    for key in ("VERTICES", "OBJECTIVES", "MAXPRIORITY", "INITIAL"):
        if key not in header:
            raise ParseError(f"missing {key}")
    n = header["VERTICES"][0]
    t = header["OBJECTIVES"][0]
    if n < 1:
        raise ParseError("VERTICES must be positive")
    if len(header["MAXPRIORITY"]) != t + 1:
        raise ParseError(f"MAXPRIORITY needs {t + 1} values")
    missing = [v for v in range(n) if v not in owner]
    if missing:
        raise ParseError(f"vertices without a V record: {missing[:10]}")
    succ: list[list[int]] = [[] for _ in range(n)]
    for a, b in edges:
        if not 0 <= a < n:
            raise ParseError(f"edge source {a} out of range")
        succ[a].append(b)
    arena = GameArena(
        owner=[owner[v] for v in range(n)],
        successors=succ,
        initial=header["INITIAL"][0],
        priorities=[prios[v] for v in range(n)],
        max_priority=header["MAXPRIORITY"],
    )
    if check:
        problems = validate(arena)
        if problems:
            raise ParseError("invalid arena: " + "; ".join(problems))
    return arena


def write_arena(arena: GameArena) -> str:
    out = [
        "SPGAME 1",
        f"VERTICES {arena.vertex_count}",
        f"OBJECTIVES {arena.objective_count}",
        "MAXPRIORITY " + " ".join(map(str, arena.max_priority)),
        f"INITIAL {arena.initial}",
    ]
    for v in range(arena.vertex_count):
        out.append(f"V {v} {arena.owner[v]} " + " ".join(map(str, arena.priorities[v])))
    for v, ws in enumerate(arena.successors):
        out.extend(f"E {v} {w}" for w in ws)
    out.append("END")
    return "\n".join(out) + "\n"


def read_arena(path) -> GameArena:
    with open(path) as fh:
        return parse_arena(fh.read())


def parse_moore(text: str) -> MooreMachine:
    states = initial = None
    update: dict[tuple[int, int], int] = {}
    choice: dict[tuple[int, int], int] = {}
    seen_magic = ended = False
    for lineno, tok in _lines(text):
        if ended:
            raise ParseError("content after END", lineno)
        if not seen_magic:
            if tok != ["MOORE", "1"]:
                raise ParseError("expected 'MOORE 1'", lineno)
            seen_magic = True
            continue
        key = tok[0]
        vals = _ints(tok[1:], lineno, key) if key != "END" else []
        if key == "STATES" and len(vals) == 1:
            states = vals[0]
        elif key == "INITIAL" and len(vals) == 1:
            initial = vals[0]
        elif key in ("T", "C") and len(vals) == 3:
            m, v, x = vals
            target = update if key == "T" else choice
            if (m, v) in target:
                raise ParseError(f"duplicate {key} entry for state {m}, vertex {v}", lineno)
            target[(m, v)] = x
        elif key == "END":
            ended = True
        else:
            raise ParseError(f"malformed record {' '.join(tok)!r}", lineno)
    if not seen_magic:
        raise ParseError("empty document")
    if not ended:
        raise ParseError("missing END")
    if states is None or initial is None:
        raise ParseError("missing STATES or INITIAL")
    if not 0 <= initial < states:
        raise ParseError(f"initial state {initial} out of range")
    for (m, _), x in update.items():
        if not (0 <= m < states and 0 <= x < states):
            raise ParseError(f"memory state out of range in T {m} -> {x}")
    return MooreMachine(states, initial, update, choice)


def write_moore(machine: MooreMachine) -> str:
    out = ["MOORE 1", f"STATES {machine.state_count}", f"INITIAL {machine.initial_state}"]
    out += [f"T {m} {v} {x}" for (m, v), x in sorted(machine.update.items())]
    out += [f"C {m} {v} {x}" for (m, v), x in sorted(machine.choice.items())]
    out.append("END")
    return "\n".join(out) + "\n"
