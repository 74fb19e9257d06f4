"""Abstract syntax for MiniAJ plus a canonical pretty-printer.

Every construct that receives a statement number carries ``label`` (the
explicit ``@n:`` value, if any) and ``node_id`` (filled in by the resolver).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Union


@dataclass
class Span:
    line: int
    col: int


# --- expressions -----------------------------------------------------------

@dataclass
class IntLit:
    value: int


@dataclass
class StrLit:
    value: str


@dataclass
class Name:
    ident: str


@dataclass
class ThisExpr:
    pass


@dataclass
class FieldAccess:
    recv: Expr
    field: str


@dataclass
class Binary:
    op: str
    left: Expr
    right: Expr


@dataclass
class PreUpdate:
    """Prefix ++/-- on a variable; updates then yields the new value."""
    op: str
    target: Name


@dataclass
class NewExpr:
    cls: str
    args: list[Expr]


@dataclass
class CallExpr:
    name: str
    args: list[Expr]


Expr = Union[IntLit, StrLit, Name, ThisExpr, FieldAccess, Binary, PreUpdate,
             NewExpr, CallExpr]


# --- statements ------------------------------------------------------------

@dataclass
class Numbered:
    label: Optional[int] = field(default=None, kw_only=True)
    node_id: Optional[int] = field(default=None, kw_only=True)
    span: Optional[Span] = field(default=None, kw_only=True)


@dataclass
class Block:
    stmts: list[Stmt] = field(default_factory=list)


@dataclass
class Assign(Numbered):
    target: Union[Name, FieldAccess]
    expr: Expr


@dataclass
class VarDecl(Numbered):
    type: str
    declarators: list[tuple[str, Optional[Expr]]]


@dataclass
class ExprStmt(Numbered):
    expr: Expr          # bare call or bare `new C(...)`


@dataclass
class PrintStmt(Numbered):
    args: list[Expr]


@dataclass
class ReadStmt(Numbered):
    name: str


@dataclass
class ReturnStmt(Numbered):
    expr: Optional[Expr]


@dataclass
class SleepStmt(Numbered):
    millis: int


@dataclass
class StartStmt(Numbered):
    name: str


@dataclass
class WaitStmt(Numbered):
    name: str


@dataclass
class NotifyStmt(Numbered):
    name: str


@dataclass
class WhileStmt(Numbered):
    cond: Expr
    body: Block


@dataclass
class ForStmt(Numbered):
    init: Optional[VarDecl | Assign]
    cond: Expr
    update: Optional[Expr | Assign]
    body: Block


@dataclass
class ElseClause(Numbered):
    """The `else` keyword is numberable on its own, like any other line."""
    body: Block = field(default_factory=Block)


@dataclass
class IfStmt(Numbered):
    cond: Expr
    then: Block
    orelse: Optional[ElseClause] = None


@dataclass
class CatchClause(Numbered):
    exc_type: str = "Exception"
    exc_name: str = "e"
    body: Block = field(default_factory=Block)


@dataclass
class TryStmt(Numbered):
    body: Block
    catch: Optional[CatchClause] = None


Stmt = Union[Assign, VarDecl, ExprStmt, PrintStmt, ReadStmt, ReturnStmt,
             SleepStmt, StartStmt, WaitStmt, NotifyStmt, WhileStmt, ForStmt,
             IfStmt, TryStmt]


# --- declarations ----------------------------------------------------------

@dataclass
class Param:
    type: str
    name: str


@dataclass
class ImportDecl(Numbered):
    path: str


@dataclass
class FieldDecl(Numbered):
    type: str
    name: str


@dataclass
class CtorDecl(Numbered):
    name: str
    params: list[Param]
    body: Block


@dataclass
class MethodDecl(Numbered):
    ret_type: str
    name: str
    params: list[Param]
    body: Block


@dataclass
class ClassDecl(Numbered):
    name: str
    extends_thread: bool
    members: list[Union[FieldDecl, CtorDecl, MethodDecl]]


@dataclass
class MethodSig:
    ret_type: Optional[str]
    name: str


@dataclass
class PointcutDecl(Numbered):
    name: str
    signature: MethodSig


@dataclass
class AdviceDecl(Numbered):
    kind: str                       # before | after | after-returning
    binding: Optional[Param]
    pointcut: str
    body: Block


@dataclass
class AspectDecl(Numbered):
    name: str
    members: list[Union[PointcutDecl, AdviceDecl]]


@dataclass
class Unit:
    decls: list[Union[ImportDecl, ClassDecl, AspectDecl]]


# --- pretty printer --------------------------------------------------------

def _pp_expr(e: Expr) -> str:
    if isinstance(e, IntLit):
        return str(e.value)
    if isinstance(e, StrLit):
        escaped = e.value.replace("\\", "\\\\").replace('"', '\\"').replace("\n", "\\n")
        return f'"{escaped}"'
    if isinstance(e, Name):
        return e.ident
    if isinstance(e, ThisExpr):
        return "this"
    if isinstance(e, FieldAccess):
        return f"{_pp_expr(e.recv)}.{e.field}"
    if isinstance(e, Binary):
        return f"({_pp_expr(e.left)} {e.op} {_pp_expr(e.right)})"
    if isinstance(e, PreUpdate):
        return f"{e.op}{e.target.ident}"
    if isinstance(e, NewExpr):
        return f"new {e.cls}({', '.join(_pp_expr(a) for a in e.args)})"
    if isinstance(e, CallExpr):
        return f"{e.name}({', '.join(_pp_expr(a) for a in e.args)})"
    raise TypeError(e)


def _lbl(node: Numbered) -> str:
    return f"@{node.label}: " if node.label is not None else ""


def _pp_block(b: Block, ind: str) -> list[str]:
    out = []
    for s in b.stmts:
        out.extend(_pp_stmt(s, ind))
    return out


def _pp_stmt(s: Stmt, ind: str) -> list[str]:
    p = ind + _lbl(s)
    if isinstance(s, Assign):
        return [f"{p}{_pp_expr(s.target)} = {_pp_expr(s.expr)};"]
    if isinstance(s, VarDecl):
        ds = ", ".join(n if e is None else f"{n} = {_pp_expr(e)}" for n, e in s.declarators)
        return [f"{p}{s.type} {ds};"]
    if isinstance(s, ExprStmt):
        return [f"{p}{_pp_expr(s.expr)};"]
    if isinstance(s, PrintStmt):
        return [f"{p}print({', '.join(_pp_expr(a) for a in s.args)});"]
    if isinstance(s, ReadStmt):
        return [f"{p}read({s.name});"]
    if isinstance(s, ReturnStmt):
        return [f"{p}return{' ' + _pp_expr(s.expr) if s.expr else ''};"]
    if isinstance(s, SleepStmt):
        return [f"{p}sleep({s.millis});"]
    if isinstance(s, StartStmt):
        return [f"{p}start({s.name});"]
    if isinstance(s, WaitStmt):
        return [f"{p}wait({s.name});"]
    if isinstance(s, NotifyStmt):
        return [f"{p}notify({s.name});"]
    if isinstance(s, WhileStmt):
        return [f"{p}while ({_pp_expr(s.cond)}) {{", *_pp_block(s.body, ind + "  "), f"{ind}}}"]
    if isinstance(s, ForStmt):
        init = _pp_stmt(s.init, "")[0].rstrip(";") if s.init else ""
        upd = ""
        if isinstance(s.update, Assign):
            upd = f"{_pp_expr(s.update.target)} = {_pp_expr(s.update.expr)}"
        elif s.update is not None:
            upd = _pp_expr(s.update)
        return [f"{p}for ({init}; {_pp_expr(s.cond)}; {upd}) {{",
                *_pp_block(s.body, ind + "  "), f"{ind}}}"]
    if isinstance(s, IfStmt):
        lines = [f"{p}if ({_pp_expr(s.cond)}) {{", *_pp_block(s.then, ind + "  "), f"{ind}}}"]
        if s.orelse is not None:
            lines += [f"{ind}{_lbl(s.orelse)}else {{", *_pp_block(s.orelse.body, ind + "  "),
                      f"{ind}}}"]
        return lines
    if isinstance(s, TryStmt):
        lines = [f"{p}try {{", *_pp_block(s.body, ind + "  "), f"{ind}}}"]
        if s.catch is not None:
            c = s.catch
            lines += [f"{ind}{_lbl(c)}catch ({c.exc_type} {c.exc_name}) {{",
                      *_pp_block(c.body, ind + "  "), f"{ind}}}"]
        return lines
    raise TypeError(s)


def pretty_print(unit: Unit) -> str:
    lines: list[str] = []
    for d in unit.decls:
        if isinstance(d, ImportDecl):
            lines.append(f"{_lbl(d)}import {d.path};")
        elif isinstance(d, ClassDecl):
            ext = " extends Thread" if d.extends_thread else ""
            lines.append(f"{_lbl(d)}class {d.name}{ext} {{")
            for m in d.members:
                if isinstance(m, FieldDecl):
                    lines.append(f"  {_lbl(m)}{m.type} {m.name};")
                elif isinstance(m, CtorDecl):
                    ps = ", ".join(f"{q.type} {q.name}" for q in m.params)
                    lines.append(f"  {_lbl(m)}{m.name}({ps}) {{")
                    lines.extend(_pp_block(m.body, "    "))
                    lines.append("  }")
                else:
                    ps = ", ".join(f"{q.type} {q.name}" for q in m.params)
                    lines.append(f"  {_lbl(m)}{m.ret_type} {m.name}({ps}) {{")
                    lines.extend(_pp_block(m.body, "    "))
                    lines.append("  }")
            lines.append("}")
        else:
            lines.append(f"{_lbl(d)}aspect {d.name} {{")
            for m in d.members:
                if isinstance(m, PointcutDecl):
                    sig = m.signature
                    inner = f"{sig.ret_type} {sig.name}()" if sig.ret_type else sig.name
                    lines.append(f"  {_lbl(m)}pointcut {m.name}(): execution({inner});")
                else:
                    if m.kind == "after-returning":
                        head = f"after returning({m.binding.type} {m.binding.name})"
                    else:
                        head = m.kind
                    lines.append(f"  {_lbl(m)}{head}(): {m.pointcut}() {{")
                    lines.extend(_pp_block(m.body, "    "))
                    lines.append("  }")
            lines.append("}")
    return "\n".join(lines) + "\n"


def strip_positions(obj):
    """Structural view of a tree with spans removed, for equality checks."""
    if isinstance(obj, Span):
        return None
    if isinstance(obj, list):
        return [strip_positions(x) for x in obj]
    if isinstance(obj, tuple):
        return tuple(strip_positions(x) for x in obj)
    if hasattr(obj, "__dataclass_fields__"):
        return (type(obj).__name__,
                tuple((f, strip_positions(getattr(obj, f)))
                      for f in obj.__dataclass_fields__ if f != "span"))
    return obj
