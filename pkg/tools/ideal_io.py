"""
Ideal files.

    # comment
    ring x,y,z
    x*y - z^2
    x^2 - 3/2*y*z

The first non-comment line declares the ordered variable list; every later
nonempty line that does not start with '#' is one generator.
"""
from pathlib import Path
from typing import List, Tuple, Union

from tools.errors import DomainError, InputFileError, PolynomialSyntaxError, ZeroPolynomialError
from tools.groebner import Ideal
from tools.ring import Polynomial, Ring, make_ring, parse_polynomial


def _content_lines(text: str) -> List[Tuple[int, int, str]]:
    """(line number, column offset, stripped text) of lines that carry content."""
    lines = []
    for number, raw in enumerate(text.splitlines(), 1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        lines.append((number, len(raw) - len(raw.lstrip()), stripped))
    return lines


def parse_ideal_text(text: str, source: str = "<input>") -> Tuple[Ring, List[Polynomial]]:
    lines = _content_lines(text)
    if not lines:
        raise InputFileError(f"{source}: empty ideal file")

    number, _, header = lines[0]
    keyword, _, rest = header.partition(" ")
    if keyword != "ring" or not rest.strip():
        raise InputFileError(f"{source}: line {number}: expected 'ring <variables>', got {header!r}")
    try:
        ring = make_ring(rest.strip())
    except DomainError as e:
        raise InputFileError(f"{source}: line {number}: {e}") from e

    polys: List[Polynomial] = []
    for number, offset, body in lines[1:]:
        try:
            f = parse_polynomial(body, ring)
        except PolynomialSyntaxError as e:
            raise e.at_line(number, offset) from e
        if f.is_zero():
            raise ZeroPolynomialError(f"{source}: line {number}: {body!r} is the zero polynomial")
        polys.append(f)
    if not polys:
        raise InputFileError(f"{source}: no generators after the ring line")
    return ring, polys


def load_polynomials(path: Union[str, Path]) -> Tuple[Ring, List[Polynomial]]:
    """Ring and generators of an ideal file, without the homogeneity check."""
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as e:
        raise InputFileError(f"cannot read {path}: {e}") from e
    return parse_ideal_text(text, str(path))


def load_ideal(path: Union[str, Path]) -> Ideal:
    _, polys = load_polynomials(path)
    return Ideal(polys)


def format_ideal(ring: Ring, polys: List[Polynomial]) -> str:
    lines = ["ring " + ",".join(ring.variables)]
    lines.extend(f.to_string() for f in polys)
    return "\n".join(lines) + "\n"
