"""Textual notation for visualization configurations.

    config  = mark "|" binding "|" binding "|" binding ;
    mark    = "point" | "line" | "area" ;
    binding = attr "->" channel ;
    attr    = "exp" | "mant" | "nominal" | "ordinal" | "temporal" | "quant" ;
    channel = "PosX" | "PosY" | "Row" | "Col" | "Length" | "Area"
            | "Intensity" | "Hue" | "Shape" ;

Whitespace around tokens is ignored, channel names are case-insensitive on
input, and the arrow may be written "->" or the typographic "↦".  The
combined exponent-plus-mantissa scale is expressed by binding exp and mant
to the same positional channel.  The parser checks syntax and arity only;
channel-level legality is :func:`omvkit.design_space.validate`'s job.
"""

from __future__ import annotations

from dataclasses import dataclass

from .design_space import Channel, Mark, OtherType, VisConfig
from .errors import ConfigSemanticError, ConfigSyntaxError

_ARROW_ALIAS = "↦"  # mapsto

_MARKS = {m.value: m for m in Mark}
_CHANNELS = {c.value.lower(): c for c in Channel}
_OTHER_ATTRS = {
    "nominal": OtherType.nominal,
    "ordinal": OtherType.ordinal,
    "temporal": OtherType.temporal,
    "quant": OtherType.quantitative,
}
_ATTR_WORDS = ("exp", "mant") + tuple(_OTHER_ATTRS)

_OTHER_KEYWORD = {v: k for k, v in _OTHER_ATTRS.items()}


@dataclass(frozen=True)
class _Token:
    kind: str  # "word" | "arrow" | "pipe"
    text: str
    position: int  # byte offset in the UTF-8 encoding


def _tokenize(text: str) -> list[_Token]:
    tokens = []
    i = 0
    byte_pos = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            byte_pos += len(ch.encode("utf-8"))
            continue
        if ch == "|":
            tokens.append(_Token("pipe", "|", byte_pos))
            i += 1
            byte_pos += 1
            continue
        if ch == _ARROW_ALIAS:
            tokens.append(_Token("arrow", ch, byte_pos))
            i += 1
            byte_pos += 3
            continue
        if ch == "-":
            if i + 1 < n and text[i + 1] == ">":
                tokens.append(_Token("arrow", "->", byte_pos))
                i += 2
                byte_pos += 2
                continue
            raise ConfigSyntaxError(
                f"unexpected character {ch!r} at byte {byte_pos}", byte_pos, ("->",)
            )
        if ch.isalpha() and ch.isascii():
            start, start_byte = i, byte_pos
            while i < n and text[i].isalpha() and text[i].isascii():
                i += 1
            word = text[start:i]
            byte_pos += len(word)
            tokens.append(_Token("word", word, start_byte))
            continue
        raise ConfigSyntaxError(
            f"unexpected character {ch!r} at byte {byte_pos}", byte_pos, ()
        )
    return tokens


class _Parser:
    def __init__(self, tokens: list[_Token], length: int):
        self.tokens = tokens
        self.pos = 0
        self.end = length  # byte length, for errors at end of input

    def peek(self) -> _Token | None:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def take(self, kind: str, expected: tuple[str, ...]) -> _Token:
        tok = self.peek()
        if tok is None:
            raise ConfigSyntaxError(
                f"unexpected end of input, expected {' or '.join(expected)}",
                self.end,
                expected,
            )
        if tok.kind != kind:
            raise ConfigSyntaxError(
                f"unexpected {tok.text!r} at byte {tok.position}, "
                f"expected {' or '.join(expected)}",
                tok.position,
                expected,
            )
        self.pos += 1
        return tok


def parse(text: str) -> VisConfig:
    """Parse a configuration string; see the module grammar."""
    if not isinstance(text, str):
        raise ConfigSyntaxError("input must be a string", 0, ())
    parser = _Parser(_tokenize(text), len(text.encode("utf-8")))

    mark_tok = parser.take("word", tuple(_MARKS))
    mark = _MARKS.get(mark_tok.text.lower())
    if mark is None:
        raise ConfigSyntaxError(
            f"unknown mark {mark_tok.text!r} at byte {mark_tok.position}",
            mark_tok.position,
            tuple(_MARKS),
        )

    bindings: list[tuple[str, Channel, int]] = []
    while parser.peek() is not None:
        parser.take("pipe", ("|",))
        attr_tok = parser.take("word", _ATTR_WORDS)
        attr = attr_tok.text.lower()
        if attr not in _ATTR_WORDS:
            raise ConfigSyntaxError(
                f"unknown attribute {attr_tok.text!r} at byte {attr_tok.position}",
                attr_tok.position,
                _ATTR_WORDS,
            )
        parser.take("arrow", ("->",))
        chan_tok = parser.take("word", tuple(c.value for c in Channel))
        channel = _CHANNELS.get(chan_tok.text.lower())
        if channel is None:
            raise ConfigSyntaxError(
                f"unknown channel {chan_tok.text!r} at byte {chan_tok.position}",
                chan_tok.position,
                tuple(c.value for c in Channel),
            )
        bindings.append((attr, channel, attr_tok.position))

    if len(bindings) != 3:
        raise ConfigSemanticError(
            f"expected exactly three bindings, got {len(bindings)}"
        )
    seen: dict[str, Channel] = {}
    other: tuple[OtherType, Channel] | None = None
    for attr, channel, position in bindings:
        if attr in seen:
            raise ConfigSemanticError(f"duplicate binding for {attr!r}", position)
        seen[attr] = channel
        if attr in _OTHER_ATTRS:
            if other is not None:
                raise ConfigSemanticError(
                    f"more than one other-attribute binding ({attr!r})", position
                )
            other = (_OTHER_ATTRS[attr], channel)
    if "exp" not in seen:
        raise ConfigSemanticError("missing binding for 'exp'")
    if "mant" not in seen:
        raise ConfigSemanticError("missing binding for 'mant'")
    if other is None:
        raise ConfigSemanticError("missing binding for the other attribute")

    return VisConfig(mark, seen["exp"], seen["mant"], other[0], other[1])


def serialize(cfg: VisConfig) -> str:
    """Canonical text form: 'mark | exp->C | mant->C | attr->C'."""
    return (
        f"{cfg.mark.value} | exp->{cfg.exp_channel.value}"
        f" | mant->{cfg.mant_channel.value}"
        f" | {_OTHER_KEYWORD[cfg.other_type]}->{cfg.other_channel.value}"
    )


def config_filename(cfg: VisConfig, suffix: str = ".svg") -> str:
    """Filesystem name for a configuration: spaces stripped, '|' -> '__', '->' -> '-'."""
    name = serialize(cfg).replace(" ", "").replace("|", "__").replace("->", "-")
    return name + suffix
