"""Recursive-descent parser for MiniAJ."""

from __future__ import annotations

from ..errors import ParseError
from .lexer import Token, tokenize
from . import syntax as ast

TYPE_KEYWORDS = ("int", "string", "void")


class _Parser:
    def __init__(self, tokens: list[Token]):
        self.toks = tokens
        self.pos = 0

    # -- token plumbing --

    def peek(self, offset: int = 0) -> Token | None:
        i = self.pos + offset
        return self.toks[i] if i < len(self.toks) else None

    def at(self, *kinds: str) -> bool:
        t = self.peek()
        return t is not None and t.kind in kinds

    def take(self) -> Token:
        t = self.peek()
        if t is None:
            raise ParseError("unexpected end of input", expected=())
        self.pos += 1
        return t

    def expect(self, *kinds: str) -> Token:
        t = self.peek()
        if t is None or t.kind not in kinds:
            got = t.kind if t else "end of input"
            line = t.line if t else None
            col = t.col if t else None
            raise ParseError(f"expected one of {kinds}, got {got}", line, col,
                             expected=kinds)
        return self.take()

    def span(self) -> ast.Span | None:
        t = self.peek()
        return ast.Span(t.line, t.col) if t else None

    # -- labels --

    def label(self) -> int | None:
        if self.at("@"):
            self.take()
            n = int(self.expect("INT").value)
            self.expect(":")
            return n
        return None

    # -- top level --

    def unit(self) -> ast.Unit:
        decls = []
        while self.peek() is not None:
            lbl = self.label()
            if self.at("import"):
                decls.append(self.import_decl(lbl))
            elif self.at("class"):
                decls.append(self.class_decl(lbl))
            elif self.at("aspect"):
                decls.append(self.aspect_decl(lbl))
            else:
                t = self.peek()
                raise ParseError(f"expected declaration, got {t.kind}", t.line, t.col,
                                 expected=("import", "class", "aspect"))
        return ast.Unit(decls)

    def import_decl(self, lbl) -> ast.ImportDecl:
        sp = self.span()
        self.expect("import")
        parts = [self.expect("IDENT").value]
        while self.at("."):
            self.take()
            if self.at("*"):
                self.take()
                parts.append("*")
                break
            parts.append(self.expect("IDENT").value)
        self.expect(";")
        return ast.ImportDecl(".".join(parts), label=lbl, span=sp)

    def class_decl(self, lbl) -> ast.ClassDecl:
        sp = self.span()
        self.expect("class")
        name = self.expect("IDENT").value
        extends_thread = False
        if self.at("extends"):
            self.take()
            base = self.expect("IDENT")
            if base.value != "Thread":
                raise ParseError("only `extends Thread` is supported",
                                 base.line, base.col, expected=("Thread",))
            extends_thread = True
        self.expect("{")
        members = []
        while not self.at("}"):
            members.append(self.member(name))
        self.expect("}")
        return ast.ClassDecl(name, extends_thread, members, label=lbl, span=sp)

    def member(self, class_name: str):
        lbl = self.label()
        sp = self.span()
        # constructor: IDENT matching the class name followed by "("
        if self.at("IDENT") and self.peek().value == class_name and \
                self.peek(1) is not None and self.peek(1).kind == "(":
            self.take()
            params = self.params()
            body = self.block()
            return ast.CtorDecl(class_name, params, body, label=lbl, span=sp)
        ret = self.type_name()
        name = self.expect("IDENT").value
        if self.at("("):
            params = self.params()
            body = self.block()
            return ast.MethodDecl(ret, name, params, body, label=lbl, span=sp)
        self.expect(";")
        return ast.FieldDecl(ret, name, label=lbl, span=sp)

    def type_name(self) -> str:
        t = self.expect(*TYPE_KEYWORDS, "IDENT")
        return t.value

    def params(self) -> list[ast.Param]:
        self.expect("(")
        out = []
        while not self.at(")"):
            if out:
                self.expect(",")
            ty = self.type_name()
            out.append(ast.Param(ty, self.expect("IDENT").value))
        self.expect(")")
        return out

    # -- aspects --

    def aspect_decl(self, lbl) -> ast.AspectDecl:
        sp = self.span()
        self.expect("aspect")
        name = self.expect("IDENT").value
        self.expect("{")
        members = []
        while not self.at("}"):
            mlbl = self.label()
            if self.at("pointcut"):
                members.append(self.pointcut(mlbl))
            else:
                members.append(self.advice(mlbl))
        self.expect("}")
        return ast.AspectDecl(name, members, label=lbl, span=sp)

    def pointcut(self, lbl) -> ast.PointcutDecl:
        sp = self.span()
        self.expect("pointcut")
        name = self.expect("IDENT").value
        self.expect("(")
        self.expect(")")
        self.expect(":")
        self.expect("execution")
        self.expect("(")
        ret = None
        if self.at(*TYPE_KEYWORDS):
            ret = self.take().value
        meth = self.expect("IDENT").value
        if self.at("("):
            self.take()
            self.expect(")")
        self.expect(")")
        self.expect(";")
        return ast.PointcutDecl(name, ast.MethodSig(ret, meth), label=lbl, span=sp)

    def advice(self, lbl) -> ast.AdviceDecl:
        sp = self.span()
        kw = self.expect("before", "after")
        kind = kw.kind
        binding = None
        if kind == "after" and self.at("returning"):
            self.take()
            kind = "after-returning"
            self.expect("(")
            ty = self.type_name()
            binding = ast.Param(ty, self.expect("IDENT").value)
            self.expect(")")
        self.expect("(")
        self.expect(")")
        self.expect(":")
        pc = self.expect("IDENT").value
        self.expect("(")
        self.expect(")")
        body = self.block()
        return ast.AdviceDecl(kind, binding, pc, body, label=lbl, span=sp)

    # -- statements --

    def block(self) -> ast.Block:
        self.expect("{")
        stmts = []
        while not self.at("}"):
            stmts.append(self.stmt())
        self.expect("}")
        return ast.Block(stmts)

    def stmt(self) -> ast.Stmt:
        lbl = self.label()
        sp = self.span()
        if self.at("while"):
            return self.while_stmt(lbl, sp)
        if self.at("for"):
            return self.for_stmt(lbl, sp)
        if self.at("if"):
            return self.if_stmt(lbl, sp)
        if self.at("try"):
            return self.try_stmt(lbl, sp)
        if self.at("print"):
            self.take()
            self.expect("(")
            args = self.args()
            self.expect(")")
            self.expect(";")
            return ast.PrintStmt(args, label=lbl, span=sp)
        if self.at("read"):
            self.take()
            self.expect("(")
            name = self.expect("IDENT").value
            self.expect(")")
            self.expect(";")
            return ast.ReadStmt(name, label=lbl, span=sp)
        if self.at("return"):
            self.take()
            expr = None if self.at(";") else self.expr()
            self.expect(";")
            return ast.ReturnStmt(expr, label=lbl, span=sp)
        if self.at("sleep"):
            self.take()
            self.expect("(")
            ms = int(self.expect("INT").value)
            self.expect(")")
            self.expect(";")
            return ast.SleepStmt(ms, label=lbl, span=sp)
        for kw, cls in (("start", ast.StartStmt), ("wait", ast.WaitStmt),
                        ("notify", ast.NotifyStmt)):
            if self.at(kw):
                self.take()
                self.expect("(")
                name = self.expect("IDENT").value
                self.expect(")")
                self.expect(";")
                return cls(name, label=lbl, span=sp)
        if self.at(*TYPE_KEYWORDS) or (self.at("IDENT") and self.peek(1) is not None
                                       and self.peek(1).kind == "IDENT"):
            return self.var_decl(lbl, sp)
        return self.simple_stmt(lbl, sp)

    def var_decl(self, lbl, sp) -> ast.VarDecl:
        ty = self.type_name()
        decls = []
        while True:
            name = self.expect("IDENT").value
            init = None
            if self.at("="):
                self.take()
                init = self.expr()
            decls.append((name, init))
            if self.at(","):
                self.take()
                continue
            break
        self.expect(";")
        return ast.VarDecl(ty, decls, label=lbl, span=sp)

    def simple_stmt(self, lbl, sp) -> ast.Stmt:
        # assignment, bare call, or bare `new C(...)`
        if self.at("new"):
            e = self.expr()
            self.expect(";")
            return ast.ExprStmt(e, label=lbl, span=sp)
        if self.at("IDENT"):
            nxt = self.peek(1)
            if nxt is not None and nxt.kind == "(":
                name = self.take().value
                self.take()
                args = self.args()
                self.expect(")")
                self.expect(";")
                return ast.ExprStmt(ast.CallExpr(name, args), label=lbl, span=sp)
            target: ast.Name | ast.FieldAccess = ast.Name(self.take().value)
            while self.at("."):
                self.take()
                target = ast.FieldAccess(target, self.expect("IDENT").value)
            self.expect("=")
            expr = self.expr()
            self.expect(";")
            return ast.Assign(target, expr, label=lbl, span=sp)
        t = self.peek()
        raise ParseError(f"expected statement, got {t.kind if t else 'end of input'}",
                         t.line if t else None, t.col if t else None,
                         expected=("statement",))

    def while_stmt(self, lbl, sp) -> ast.WhileStmt:
        self.expect("while")
        self.expect("(")
        cond = self.expr()
        self.expect(")")
        if self.at(";"):
            self.take()
            body = ast.Block([])
        else:
            body = self.block()
        return ast.WhileStmt(cond, body, label=lbl, span=sp)

    def for_stmt(self, lbl, sp) -> ast.ForStmt:
        self.expect("for")
        self.expect("(")
        init = None
        if not self.at(";"):
            if self.at(*TYPE_KEYWORDS):
                ty = self.type_name()
                name = self.expect("IDENT").value
                self.expect("=")
                init = ast.VarDecl(ty, [(name, self.expr())])
            else:
                name = self.expect("IDENT").value
                self.expect("=")
                init = ast.Assign(ast.Name(name), self.expr())
        self.expect(";")
        cond = self.expr()
        self.expect(";")
        update = None
        if not self.at(")"):
            if self.at("++", "--"):
                op = self.take().kind
                update = ast.PreUpdate(op, ast.Name(self.expect("IDENT").value))
            else:
                name = self.expect("IDENT").value
                self.expect("=")
                update = ast.Assign(ast.Name(name), self.expr())
        self.expect(")")
        body = self.block()
        return ast.ForStmt(init, cond, update, body, label=lbl, span=sp)

    def if_stmt(self, lbl, sp) -> ast.IfStmt:
        self.expect("if")
        self.expect("(")
        cond = self.expr()
        self.expect(")")
        then = self.block()
        orelse = None
        save = self.pos
        elbl = self.label()
        if self.at("else"):
            esp = self.span()
            self.take()
            orelse = ast.ElseClause(self.block(), label=elbl, span=esp)
        else:
            self.pos = save
        return ast.IfStmt(cond, then, orelse, label=lbl, span=sp)

    def try_stmt(self, lbl, sp) -> ast.TryStmt:
        self.expect("try")
        body = self.block()
        catch = None
        save = self.pos
        clbl = self.label()
        if self.at("catch"):
            csp = self.span()
            self.take()
            self.expect("(")
            ty = self.expect("IDENT").value
            nm = self.expect("IDENT").value
            self.expect(")")
            cbody = self.block()
            catch = ast.CatchClause(ty, nm, cbody, label=clbl, span=csp)
        else:
            self.pos = save
        return ast.TryStmt(body, catch, label=lbl, span=sp)

    def args(self) -> list[ast.Expr]:
        out = []
        while not self.at(")"):
            if out:
                self.expect(",")
            out.append(self.expr())
        return out

    # -- expressions (precedence climbing) --

    def expr(self) -> ast.Expr:
        return self.comparison()

    def comparison(self) -> ast.Expr:
        left = self.additive()
        while self.at("<", ">", "<=", ">=", "==", "!="):
            op = self.take().kind
            left = ast.Binary(op, left, self.additive())
        return left

    def additive(self) -> ast.Expr:
        left = self.multiplicative()
        while self.at("+", "-"):
            op = self.take().kind
            left = ast.Binary(op, left, self.multiplicative())
        return left

    def multiplicative(self) -> ast.Expr:
        left = self.unary()
        while self.at("*", "/", "%"):
            op = self.take().kind
            left = ast.Binary(op, left, self.unary())
        return left

    def unary(self) -> ast.Expr:
        if self.at("++", "--"):
            op = self.take().kind
            return ast.PreUpdate(op, ast.Name(self.expect("IDENT").value))
        if self.at("-"):
            self.take()
            inner = self.unary()
            return ast.Binary("-", ast.IntLit(0), inner)
        return self.postfix()

    def postfix(self) -> ast.Expr:
        e = self.primary()
        while self.at("."):
            self.take()
            e = ast.FieldAccess(e, self.expect("IDENT").value)
        return e

    def primary(self) -> ast.Expr:
        if self.at("INT"):
            return ast.IntLit(int(self.take().value))
        if self.at("STRING"):
            return ast.StrLit(self.take().value)
        if self.at("this"):
            self.take()
            return ast.ThisExpr()
        if self.at("new"):
            self.take()
            cls = self.expect("IDENT").value
            self.expect("(")
            args = self.args()
            self.expect(")")
            return ast.NewExpr(cls, args)
        if self.at("("):
            self.take()
            e = self.expr()
            self.expect(")")
            return e
        if self.at("IDENT"):
            name = self.take().value
            if self.at("("):
                self.take()
                args = self.args()
                self.expect(")")
                return ast.CallExpr(name, args)
            return ast.Name(name)
        t = self.peek()
        raise ParseError(f"expected expression, got {t.kind if t else 'end of input'}",
                         t.line if t else None, t.col if t else None,
                         expected=("expression",))


def parse(tokens: list[Token]) -> ast.Unit:
    return _Parser(tokens).unit()


def parse_text(text: str) -> ast.Unit:
    return parse(tokenize(text))
