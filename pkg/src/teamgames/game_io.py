"""Loading and storing game documents and analysis tables.

Game documents are JSON trees with extension ``.game``. Subsets appear as
arrays of player names (serialized in declaration order), never as masks,
so documents stay hand-editable; masks are built at load time. Three
document kinds share the envelope:

* team games: ``players``, ``outcomes``, ``consequence`` (one entry per
  nonempty subset), ``utilities`` (entries keyed by subset and outcome);
* TU games: ``players`` and ``utilities`` keyed by subset only, one entry
  per nonempty subset, with the empty subset implicitly (or explicitly)
  worth 0;
* Cobb-Douglas games: a ``cobb_douglas`` parameter block.

Every validation failure names the offending field; syntax errors carry the
line and column. Tables are written as UTF-8 CSV with a header row and
full-precision (shortest round-trip) decimals, and graph exports as
``src dst weight`` edge-list lines, so repeated runs are byte-identical.
"""

from __future__ import annotations

import csv
import json
import math
from pathlib import Path

import numpy as np

from .additivity import PerceptionGraph
from .cobb import CobbDouglasConfig
from .errors import GameLoadError
from .players import PlayerSet
from .st import STGame
from .tu import TUGame

DOCUMENT_VERSION = 1


def _require(doc: dict, key: str, kind, location: str):
    if key not in doc:
        raise GameLoadError(f"missing required field {key!r}", location)
    value = doc[key]
    if not isinstance(value, kind):
        raise GameLoadError(
            f"field {key!r} must be {getattr(kind, '__name__', kind)}, got {type(value).__name__}",
            location,
        )
    return value


def _parse_players(doc: dict) -> list[str]:
    players = _require(doc, "players", list, "players")
    if not players:
        raise GameLoadError("at least one player is required", "players")
    seen = set()
    for i, name in enumerate(players):
        if not isinstance(name, str) or not name:
            raise GameLoadError("player names must be nonempty strings", f"players[{i}]")
        if name in seen:
            raise GameLoadError(f"duplicate player {name!r}", f"players[{i}]")
        seen.add(name)
    return players


def _parse_subset(entry, players: list[str], location: str) -> int:
    if not isinstance(entry, list):
        raise GameLoadError("subset must be an array of player names", location)
    index = {name: i for i, name in enumerate(players)}
    mask = 0
    for j, name in enumerate(entry):
        if name not in index:
            raise GameLoadError(f"unknown player {name!r}", f"{location}[{j}]")
        bit = 1 << index[name]
        if mask & bit:
            raise GameLoadError(f"player {name!r} listed twice", f"{location}[{j}]")
        mask |= bit
    return mask


def _parse_value(entry, location: str) -> float:
    if isinstance(entry, bool) or not isinstance(entry, (int, float)):
        raise GameLoadError(f"value must be a number, got {entry!r}", location)
    value = float(entry)
    if not math.isfinite(value):
        raise GameLoadError(f"value must be finite, got {entry!r}", location)
    return value


def parse_document(doc: dict):
    """Validate a document tree and build the game it describes."""
    if not isinstance(doc, dict):
        raise GameLoadError("document root must be an object", "$")
    version = _require(doc, "version", int, "version")
    if version != DOCUMENT_VERSION:
        raise GameLoadError(f"unsupported document version {version}", "version")

    if "cobb_douglas" in doc:
        return _parse_cobb(doc)
    if "outcomes" in doc or "consequence" in doc:
        return _parse_st(doc)
    return _parse_tu(doc)


def _parse_cobb(doc: dict) -> CobbDouglasConfig:
    block = _require(doc, "cobb_douglas", dict, "cobb_douglas")
    known = {"theta", "gamma", "alpha", "beta", "resources"}
    for key in block:
        if key not in known:
            raise GameLoadError(f"unknown parameter {key!r}", f"cobb_douglas.{key}")
    params = {}
    for key in ("theta", "gamma", "alpha", "beta"):
        if key in block:
            params[key] = _parse_value(block[key], f"cobb_douglas.{key}")
    resources = None
    if "resources" in block:
        raw = block["resources"]
        if not isinstance(raw, list) or not raw:
            raise GameLoadError("resources must be a nonempty array", "cobb_douglas.resources")
        resources = tuple(
            _parse_value(v, f"cobb_douglas.resources[{i}]") for i, v in enumerate(raw)
        )
        if "players" in doc:
            players = _parse_players(doc)
            if len(players) != len(resources):
                raise GameLoadError(
                    f"{len(resources)} resource pools for {len(players)} players",
                    "cobb_douglas.resources",
                )
    try:
        return CobbDouglasConfig(resources=resources, **params)
    except ValueError as exc:
        raise GameLoadError(str(exc), "cobb_douglas") from None


def _parse_tu(doc: dict) -> TUGame:
    players = _parse_players(doc)
    n = len(players)
    entries = _require(doc, "utilities", list, "utilities")
    table = np.zeros(1 << n)
    seen: dict[int, int] = {}
    for i, entry in enumerate(entries):
        loc = f"utilities[{i}]"
        if not isinstance(entry, dict):
            raise GameLoadError("utility entry must be an object", loc)
        if "outcome" in entry:
            raise GameLoadError(
                "TU utility entries carry no outcome (did you mean a team-game document "
                "with an outcomes section?)",
                f"{loc}.outcome",
            )
        mask = _parse_subset(entry.get("subset"), players, f"{loc}.subset")
        value = _parse_value(entry.get("value"), f"{loc}.value")
        if mask in seen:
            raise GameLoadError(
                f"duplicate entry for subset (also at utilities[{seen[mask]}])", f"{loc}.subset"
            )
        if mask == 0 and value != 0.0:
            raise GameLoadError("the empty coalition must be worth 0", f"{loc}.value")
        seen[mask] = i
        table[mask] = value
    for mask in range(1, 1 << n):
        if mask not in seen:
            names = [players[i] for i in PlayerSet(mask)]
            raise GameLoadError(f"no utility entry for subset {names}", "utilities")
    return TUGame(n, table, tuple(players))


def _parse_st(doc: dict) -> STGame:
    players = _parse_players(doc)
    n = len(players)
    outcomes = _require(doc, "outcomes", list, "outcomes")
    if not outcomes:
        raise GameLoadError("at least one outcome is required", "outcomes")
    seen_outcomes = set()
    for i, outcome in enumerate(outcomes):
        if not isinstance(outcome, str) or not outcome:
            raise GameLoadError("outcome ids must be nonempty strings", f"outcomes[{i}]")
        if outcome in seen_outcomes:
            raise GameLoadError(f"duplicate outcome {outcome!r}", f"outcomes[{i}]")
        seen_outcomes.add(outcome)

    cons_entries = _require(doc, "consequence", list, "consequence")
    consequence: dict[int, str] = {}
    positions: dict[int, int] = {}
    for i, entry in enumerate(cons_entries):
        loc = f"consequence[{i}]"
        if not isinstance(entry, dict):
            raise GameLoadError("consequence entry must be an object", loc)
        mask = _parse_subset(entry.get("subset"), players, f"{loc}.subset")
        if mask == 0:
            raise GameLoadError("the empty coalition has no consequence entry", f"{loc}.subset")
        outcome = entry.get("outcome")
        if outcome not in seen_outcomes:
            raise GameLoadError(f"undeclared outcome {outcome!r}", f"{loc}.outcome")
        if mask in consequence:
            raise GameLoadError(
                f"duplicate consequence for subset (also at consequence[{positions[mask]}])",
                f"{loc}.subset",
            )
        consequence[mask] = outcome
        positions[mask] = i
    for mask in range(1, 1 << n):
        if mask not in consequence:
            names = [players[i] for i in PlayerSet(mask)]
            raise GameLoadError(f"no consequence entry for subset {names}", "consequence")

    util_entries = _require(doc, "utilities", list, "utilities")
    utilities: dict[tuple[int, str], float] = {}
    upositions: dict[tuple[int, str], int] = {}
    for i, entry in enumerate(util_entries):
        loc = f"utilities[{i}]"
        if not isinstance(entry, dict):
            raise GameLoadError("utility entry must be an object", loc)
        mask = _parse_subset(entry.get("subset"), players, f"{loc}.subset")
        if mask == 0:
            raise GameLoadError("the empty subset assesses nothing", f"{loc}.subset")
        outcome = entry.get("outcome")
        if outcome not in seen_outcomes:
            raise GameLoadError(f"undeclared outcome {outcome!r}", f"{loc}.outcome")
        value = _parse_value(entry.get("value"), f"{loc}.value")
        key = (mask, outcome)
        if key in utilities:
            raise GameLoadError(
                f"duplicate utility for (subset, outcome) (also at utilities[{upositions[key]}])",
                loc,
            )
        utilities[key] = value
        upositions[key] = i
    try:
        return STGame.from_tables(n, outcomes, consequence, utilities, tuple(players))
    except ValueError as exc:
        raise GameLoadError(str(exc), "utilities") from None


def load_game(source):
    """Load a game document from a path or open text stream."""
    if hasattr(source, "read"):
        text = source.read()
    else:
        text = Path(source).read_text(encoding="utf-8")
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GameLoadError(
            f"malformed document: {exc.msg}", f"line {exc.lineno}, column {exc.colno}"
        ) from None
    return parse_document(doc)


def _subset_names(mask: int, players) -> list[str]:
    return [players[i] for i in PlayerSet(mask)]


def document_for(game) -> dict:
    """Document tree for a game; inverse of :func:`parse_document`."""
    if isinstance(game, TUGame):
        return {
            "version": DOCUMENT_VERSION,
            "players": list(game.players),
            "utilities": [
                {"subset": _subset_names(mask, game.players), "value": float(game.u[mask])}
                for mask in range(1, 1 << game.n)
            ],
        }
    if isinstance(game, STGame):
        if game.utility_table is None or game.consequence_table is None:
            raise ValueError("only tabulated team games can be serialized")
        return {
            "version": DOCUMENT_VERSION,
            "players": list(game.players),
            "outcomes": list(game.outcomes),
            "consequence": [
                {
                    "subset": _subset_names(mask, game.players),
                    "outcome": game.consequence_table[mask],
                }
                for mask in range(1, 1 << game.n)
            ],
            "utilities": [
                {"subset": _subset_names(mask, game.players), "outcome": outcome, "value": float(v)}
                for (mask, outcome), v in sorted(
                    game.utility_table.items(), key=lambda kv: (kv[0][0], str(kv[0][1]))
                )
            ],
        }
    if isinstance(game, CobbDouglasConfig):
        block = {
            "theta": game.theta,
            "gamma": game.gamma,
            "alpha": game.alpha,
            "beta": game.beta,
        }
        if game.resources is not None:
            block["resources"] = list(game.resources)
        return {"version": DOCUMENT_VERSION, "cobb_douglas": block}
    raise TypeError(f"cannot serialize {type(game).__name__}")


def save_game(game, path) -> None:
    Path(path).write_text(json.dumps(document_for(game), indent=2) + "\n", encoding="utf-8")


def format_cell(value) -> str:
    """Full-precision, deterministic text for one table cell."""
    if isinstance(value, bool):
        return str(value).lower()
    if isinstance(value, float):
        return repr(value)
    if value is None:
        return ""
    return str(value)


def write_table(rows, columns, path) -> None:
    """Write rectangular data as UTF-8 CSV with a header and newline-terminated rows.

    Rows may be sequences (matching ``columns``) or mappings keyed by column
    name. Row order is preserved, so identical inputs produce identical
    bytes.
    """
    columns = list(columns)
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(columns)
        for i, row in enumerate(rows):
            if isinstance(row, dict):
                missing = [c for c in columns if c not in row]
                if missing:
                    raise ValueError(f"row {i} is missing columns {missing}")
                cells = [row[c] for c in columns]
            else:
                cells = list(row)
                if len(cells) != len(columns):
                    raise ValueError(f"row {i} has {len(cells)} cells for {len(columns)} columns")
            writer.writerow([format_cell(c) for c in cells])


def write_edges(graph: PerceptionGraph, path) -> None:
    """Serialize a perception graph as ``src dst weight`` lines."""
    Path(path).write_text("\n".join(graph.to_lines()) + "\n", encoding="utf-8")
