"""Ready-made graphs for the playground and the test suite."""
from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Preset:
    name: str
    title: str
    mode: str            # recommended engine mode
    graph: str           # graph file content
    description: str


PRESETS: dict[str, Preset] = {}


def _add(preset: Preset):
    PRESETS[preset.name] = preset


_add(Preset(
    name="a2",
    title="Two generators, one bond",
    mode="classical",
    graph="vertices 2\nedge 1 2 m=3 w=1\n",
    description="Smallest interesting game: six positions, longest word 1 2 1.",
))

_add(Preset(
    name="a3-chain",
    title="Chain of three generators",
    mode="classical",
    graph="vertices 3\nedge 1 2 m=3 w=1\nedge 2 3 m=3 w=1\n",
    description="The symmetric group on four letters; 24 reachable positions.",
))

_add(Preset(
    name="s4-chain",
    title="Weighted chain (weights 2 and 1/2)",
    mode="generalized",
    graph="vertices 3\nedge 1 2 m=3 w=2\nedge 2 3 m=3 w=1/2\n",
    description="A tree is always balanced: the twisted representation is a "
                "diagonal conjugate of the standard one and the generalized "
                "game mirrors the classical one through the gauge.",
))

_add(Preset(
    name="six-vertex-signed",
    title="Balanced signed graph on six vertices",
    mode="generalized",
    graph=("vertices 6\n"
           "edge 1 2 m=3 w=-1\n"
           "edge 2 3 m=3 w=-1\n"
           "edge 2 4 m=3 w=1\n"
           "edge 3 5 m=3 w=-1\n"
           "edge 4 5 m=3 w=1\n"
           "edge 5 6 m=3 w=1\n"),
    description="Every cycle carries an even number of minus signs, so the "
                "sign pattern is a gauge in disguise: potentials "
                "(+1,-1,+1,-1,-1,-1).",
))

_add(Preset(
    name="four-cycle-signed",
    title="Four-cycle with one negative edge",
    mode="classical",
    graph=("vertices 4\n"
           "edge 1 2 m=3 w=1\n"
           "edge 2 3 m=3 w=1\n"
           "edge 3 4 m=3 w=1\n"
           "edge 4 1 m=3 w=-1\n"),
    description="Unbalanced: the cycle weight -1 has order two and the twisted "
                "representation collapses onto a monomial group of order 192. "
                "The generalized game is undefined here; play classically.",
))

_add(Preset(
    name="four-cycle-affine",
    title="Four-cycle with weight 2",
    mode="classical",
    graph=("vertices 4\n"
           "edge 1 2 m=3 w=1\n"
           "edge 2 3 m=3 w=1\n"
           "edge 3 4 m=3 w=1\n"
           "edge 4 1 m=3 w=2\n"),
    description="The cycle weight 2 has infinite order: the twisted "
                "representation is faithful with affine image.",
))

_add(Preset(
    name="imo-pentagon",
    title="Pentagon",
    mode="classical",
    graph=("vertices 5\n"
           "edge 1 2 m=3 w=1\n"
           "edge 2 3 m=3 w=1\n"
           "edge 3 4 m=3 w=1\n"
           "edge 4 5 m=3 w=1\n"
           "edge 5 1 m=3 w=1\n"),
    description="The classic five-integers game lives on this graph: fire "
                "negative vertices until none remain.",
))
