//! Recursive-descent parser. Every production entry fires a probe; errors
//! fire a probe keyed by what was expected.

use std::collections::HashMap;
use std::fmt;
use std::rc::Rc;

use crate::ast::*;
use crate::bugs::Arming;
use crate::lexer::{lex, Keyword, LexErrorKind, Punct, Spanned, Tok};
use crate::probe::{site, site_id, Probe};

/// Nesting depth (statements, parentheses, literals) the parser accepts.
pub const MAX_NESTING: u32 = 128;

#[derive(Debug, Clone, PartialEq)]
pub struct ParseError {
    pub pos: usize,
    pub expected: Vec<&'static str>,
    pub found: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parse error at byte {}: expected {}, found {}", self.pos, self.expected.join(" or "), self.found)
    }
}

impl std::error::Error for ParseError {}

/// Names the interpreter resolves without a declaration. They are interned
/// first so their ids are fixed.
pub const GLOBAL_NAMES: [&str; 3] = ["print", "Array", "String"];

pub fn parse(src: &[u8], probe: &mut Probe<'_>, arming: Arming) -> Result<Program, ParseError> {
    probe.hit(site!("parse", "lex"));
    let toks = match lex(src) {
        Ok(t) => t,
        Err(e) => {
            let what = match e.kind {
                LexErrorKind::IllegalChar => "valid character",
                LexErrorKind::UnterminatedString => "closing quote",
                LexErrorKind::UnterminatedComment => "comment end",
                LexErrorKind::BadNumber => "number",
            };
            probe.hit(site_id("lex_error", what));
            return Err(ParseError {
                pos: e.pos,
                expected: vec![what],
                found: "invalid input".into(),
            });
        }
    };
    let mut p = Parser {
        toks: &toks,
        i: 0,
        probe,
        names: Vec::new(),
        index: HashMap::new(),
        depth: 0,
        fn_depth: 0,
        arming,
    };
    for g in GLOBAL_NAMES {
        p.intern(g);
    }
    let mut body = Vec::new();
    while !p.at_eof() {
        body.push(p.statement()?);
    }
    p.probe.hit(site!("parse", "program_end"));
    Ok(Program {
        body,
        names: p.names.iter().map(|n| n.to_string()).collect(),
    })
}

struct Parser<'t, 'p, 'c> {
    toks: &'t [Spanned],
    i: usize,
    probe: &'p mut Probe<'c>,
    names: Vec<Rc<str>>,
    index: HashMap<Rc<str>, Name>,
    depth: u32,
    fn_depth: u32,
    arming: Arming,
}

type PResult<T> = Result<T, ParseError>;

impl Parser<'_, '_, '_> {
    fn intern(&mut self, s: &str) -> Name {
        if let Some(&n) = self.index.get(s) {
            return n;
        }
        let rc: Rc<str> = Rc::from(s);
        let id = self.names.len() as Name;
        self.names.push(Rc::clone(&rc));
        self.index.insert(rc, id);
        id
    }

    fn peek(&self) -> &Tok {
        &self.toks[self.i].tok
    }

    fn at_eof(&self) -> bool {
        matches!(self.peek(), Tok::Eof)
    }

    fn advance(&mut self) -> Tok {
        let t = self.toks[self.i].tok.clone();
        if self.i + 1 < self.toks.len() {
            self.i += 1;
        }
        t
    }

    fn is_punct(&self, p: Punct) -> bool {
        matches!(self.peek(), Tok::Punct(q) if *q == p)
    }

    fn is_kw(&self, k: Keyword) -> bool {
        matches!(self.peek(), Tok::Kw(q) if *q == k)
    }

    fn eat_punct(&mut self, p: Punct) -> bool {
        if self.is_punct(p) {
            self.advance();
            true
        } else {
            false
        }
    }

    fn error(&mut self, expected: &'static str) -> ParseError {
        self.probe.hit(site_id("parse_error", expected));
        ParseError {
            pos: self.toks[self.i].pos,
            expected: vec![expected],
            found: self.peek().to_string(),
        }
    }

    fn expect(&mut self, p: Punct) -> PResult<()> {
        if self.eat_punct(p) {
            Ok(())
        } else {
            Err(self.error(p.as_str()))
        }
    }

    fn ident(&mut self) -> PResult<Name> {
        match self.peek() {
            Tok::Ident(s) => {
                let s = s.clone();
                self.advance();
                Ok(self.intern(&s))
            }
            _ => Err(self.error("identifier")),
        }
    }

    fn enter(&mut self) -> PResult<()> {
        self.depth += 1;
        if self.depth > MAX_NESTING {
            return Err(self.error("shallower nesting"));
        }
        Ok(())
    }

    fn leave(&mut self) {
        self.depth -= 1;
    }

    fn statement(&mut self) -> PResult<Stmt> {
        self.enter()?;
        let s = self.statement_inner();
        self.leave();
        s
    }

    fn statement_inner(&mut self) -> PResult<Stmt> {
        self.probe.hit(site!("parse", "statement"));
        match self.peek().clone() {
            Tok::Kw(k @ (Keyword::Let | Keyword::Const | Keyword::Var)) => {
                self.advance();
                let s = self.declaration(k)?;
                self.expect(Punct::Semi)?;
                Ok(s)
            }
            Tok::Kw(Keyword::Function) => {
                self.probe.hit(site!("parse", "function_decl"));
                self.advance();
                let name = self.ident()?;
                let def = self.function_rest(Some(name))?;
                Ok(Stmt::Function(def))
            }
            Tok::Kw(Keyword::Class) => {
                self.probe.hit(site!("parse", "class_decl"));
                self.advance();
                self.class_rest()
            }
            Tok::Kw(Keyword::If) => {
                self.probe.hit(site!("parse", "if"));
                self.advance();
                self.expect(Punct::LParen)?;
                let cond = self.expression()?;
                self.expect(Punct::RParen)?;
                let then = self.body()?;
                let otherwise = if self.is_kw(Keyword::Else) {
                    self.probe.hit(site!("parse", "else"));
                    self.advance();
                    Some(self.body()?)
                } else {
                    None
                };
                Ok(Stmt::If { cond, then, otherwise })
            }
            Tok::Kw(Keyword::While) => {
                self.probe.hit(site!("parse", "while"));
                self.advance();
                self.expect(Punct::LParen)?;
                let cond = self.expression()?;
                self.expect(Punct::RParen)?;
                let body = self.body()?;
                Ok(Stmt::While { cond, body })
            }
            Tok::Kw(Keyword::For) => {
                self.probe.hit(site!("parse", "for"));
                self.advance();
                self.for_rest()
            }
            Tok::Kw(Keyword::Return) => {
                self.probe.hit(site!("parse", "return"));
                if self.fn_depth == 0 {
                    return Err(self.error("return inside a function"));
                }
                self.advance();
                let value = if self.is_punct(Punct::Semi) {
                    None
                } else {
                    Some(self.expression()?)
                };
                self.expect(Punct::Semi)?;
                Ok(Stmt::Return(value))
            }
            Tok::Punct(Punct::Semi) => {
                self.probe.hit(site!("parse", "empty"));
                self.advance();
                Ok(Stmt::Empty)
            }
            _ => {
                self.probe.hit(site!("parse", "expression_statement"));
                let e = self.expression()?;
                self.expect(Punct::Semi)?;
                Ok(Stmt::Expr(e))
            }
        }
    }

    fn declaration(&mut self, k: Keyword) -> PResult<Stmt> {
        let kind = match k {
            Keyword::Let => {
                self.probe.hit(site!("parse", "let"));
                DeclKind::Let
            }
            Keyword::Const => {
                self.probe.hit(site!("parse", "const"));
                DeclKind::Const
            }
            _ => {
                self.probe.hit(site!("parse", "var"));
                DeclKind::Var
            }
        };
        let name = self.ident()?;
        let init = if self.eat_punct(Punct::Assign) {
            Some(self.assignment()?)
        } else {
            if kind == DeclKind::Const {
                return Err(self.error("const initializer"));
            }
            None
        };
        Ok(Stmt::Decl { kind, name, init })
    }

    fn for_rest(&mut self) -> PResult<Stmt> {
        self.expect(Punct::LParen)?;
        let init = match self.peek().clone() {
            Tok::Punct(Punct::Semi) => None,
            Tok::Kw(k @ (Keyword::Let | Keyword::Const | Keyword::Var)) => {
                self.advance();
                Some(Box::new(self.declaration(k)?))
            }
            _ => Some(Box::new(Stmt::Expr(self.expression()?))),
        };
        self.expect(Punct::Semi)?;
        let cond = if self.is_punct(Punct::Semi) {
            None
        } else {
            Some(self.expression()?)
        };
        self.expect(Punct::Semi)?;
        let update = if self.is_punct(Punct::RParen) {
            None
        } else {
            Some(self.expression()?)
        };
        self.expect(Punct::RParen)?;
        let body = self.body()?;
        Ok(Stmt::For { init, cond, update, body })
    }

    fn class_rest(&mut self) -> PResult<Stmt> {
        let name = self.ident()?;
        self.expect(Punct::LBrace)?;
        let mut methods = Vec::new();
        while !self.eat_punct(Punct::RBrace) {
            self.probe.hit(site!("parse", "method"));
            let m = self.ident()?;
            let def = self.function_rest(Some(m))?;
            methods.push((m, def));
        }
        Ok(Stmt::Class(Rc::new(ClassDef { name, methods })))
    }

    /// `{ stmt* }` or a single statement.
    fn body(&mut self) -> PResult<Vec<Stmt>> {
        if self.eat_punct(Punct::LBrace) {
            self.probe.hit(site!("parse", "block"));
            self.enter()?;
            let mut out = Vec::new();
            while !self.eat_punct(Punct::RBrace) {
                if self.at_eof() {
                    return Err(self.error("}"));
                }
                out.push(self.statement()?);
            }
            self.leave();
            Ok(out)
        } else {
            Ok(vec![self.statement()?])
        }
    }

    /// Parameter list and block body.
    fn function_rest(&mut self, name: Option<Name>) -> PResult<Rc<FunctionDef>> {
        self.expect(Punct::LParen)?;
        let mut params = Vec::new();
        if !self.eat_punct(Punct::RParen) {
            loop {
                params.push(self.ident()?);
                if self.eat_punct(Punct::RParen) {
                    break;
                }
                self.expect(Punct::Comma)?;
            }
        }
        if !self.is_punct(Punct::LBrace) {
            return Err(self.error("{"));
        }
        self.fn_depth += 1;
        let body = self.body();
        self.fn_depth -= 1;
        let body = body?;
        Ok(Rc::new(FunctionDef {
            name,
            declared_slots: declared_slots(&params, &body),
            params,
            body: Body::Block(body),
        }))
    }

    fn expression(&mut self) -> PResult<Expr> {
        self.assignment()
    }

    fn assignment(&mut self) -> PResult<Expr> {
        self.enter()?;
        let r = self.assignment_inner();
        self.leave();
        r
    }

    fn assignment_inner(&mut self) -> PResult<Expr> {
        self.probe.hit(site!("parse", "assignment"));
        let lhs = self.logic_or()?;
        if self.is_punct(Punct::Assign) {
            if !lhs.is_assignable() {
                return Err(self.error("assignable target"));
            }
            self.advance();
            self.probe.hit(site!("parse", "assign_op"));
            let rhs = self.assignment()?;
            return Ok(Expr::Assign(Box::new(lhs), Box::new(rhs)));
        }
        Ok(lhs)
    }

    fn logic_or(&mut self) -> PResult<Expr> {
        let base = self.depth;
        let mut e = self.logic_and()?;
        while self.eat_punct(Punct::Or) {
            // left-nested chains count towards nesting
            self.enter()?;
            self.probe.hit(site!("parse", "or"));
            let r = self.logic_and()?;
            e = Expr::Logic(LogicOp::Or, Box::new(e), Box::new(r));
        }
        self.depth = base;
        Ok(e)
    }

    fn logic_and(&mut self) -> PResult<Expr> {
        let base = self.depth;
        let mut e = self.equality()?;
        while self.eat_punct(Punct::And) {
            // left-nested chains count towards nesting
            self.enter()?;
            self.probe.hit(site!("parse", "and"));
            let r = self.equality()?;
            e = Expr::Logic(LogicOp::And, Box::new(e), Box::new(r));
        }
        self.depth = base;
        Ok(e)
    }

    fn binary_level(&mut self, ops: &[Punct], next: fn(&mut Self) -> PResult<Expr>, site: u32) -> PResult<Expr> {
        let base = self.depth;
        let mut e = next(self)?;
        loop {
            let op = match self.peek() {
                Tok::Punct(p) if ops.contains(p) => *p,
                _ => {
                    self.depth = base;
                    return Ok(e);
                }
            };
            self.advance();
            self.enter()?;
            self.probe.hit(site);
            let r = next(self)?;
            e = Expr::Binary(BinOp::from_punct(op).unwrap(), Box::new(e), Box::new(r));
        }
    }

    fn equality(&mut self) -> PResult<Expr> {
        self.binary_level(
            &[Punct::Eq, Punct::Ne, Punct::StrictEq, Punct::StrictNe],
            Self::relational,
            site!("parse", "equality"),
        )
    }

    fn relational(&mut self) -> PResult<Expr> {
        self.binary_level(
            &[Punct::Lt, Punct::Gt, Punct::Le, Punct::Ge],
            Self::additive,
            site!("parse", "relational"),
        )
    }

    fn additive(&mut self) -> PResult<Expr> {
        self.binary_level(&[Punct::Plus, Punct::Minus], Self::multiplicative, site!("parse", "additive"))
    }

    fn multiplicative(&mut self) -> PResult<Expr> {
        self.binary_level(
            &[Punct::Star, Punct::Slash, Punct::Percent],
            Self::unary,
            site!("parse", "multiplicative"),
        )
    }

    fn unary(&mut self) -> PResult<Expr> {
        self.enter()?;
        let r = self.unary_inner();
        self.leave();
        r
    }

    fn unary_inner(&mut self) -> PResult<Expr> {
        let op = match self.peek() {
            Tok::Punct(Punct::Not) => UnOp::Not,
            Tok::Punct(Punct::Minus) => UnOp::Neg,
            Tok::Punct(Punct::Plus) => UnOp::Plus,
            Tok::Kw(Keyword::Typeof) => UnOp::Typeof,
            Tok::Kw(Keyword::Delete) => UnOp::Delete,
            Tok::Punct(p @ (Punct::Inc | Punct::Dec)) => {
                let delta = if *p == Punct::Inc { 1.0 } else { -1.0 };
                self.advance();
                self.probe.hit(site!("parse", "prefix_update"));
                let target = self.unary()?;
                if !target.is_assignable() {
                    return Err(self.error("assignable target"));
                }
                return Ok(Expr::Update {
                    target: Box::new(target),
                    delta,
                    prefix: true,
                });
            }
            _ => return self.postfix(),
        };
        self.advance();
        self.probe.hit(site_id("parse_unary", unop_name(op)));
        let e = self.unary()?;
        Ok(Expr::Unary(op, Box::new(e)))
    }

    fn postfix(&mut self) -> PResult<Expr> {
        let base = self.depth;
        let mut e = self.primary()?;
        loop {
            if matches!(
                self.peek(),
                Tok::Punct(Punct::Dot | Punct::LBracket | Punct::LParen | Punct::Inc | Punct::Dec)
            ) {
                self.enter()?;
            }
            match self.peek() {
                Tok::Punct(Punct::Dot) => {
                    self.advance();
                    self.probe.hit(site!("parse", "member"));
                    let name = self.ident()?;
                    e = Expr::Member(Box::new(e), name);
                }
                Tok::Punct(Punct::LBracket) => {
                    self.advance();
                    self.probe.hit(site!("parse", "index"));
                    let idx = self.expression()?;
                    self.expect(Punct::RBracket)?;
                    e = Expr::Index(Box::new(e), Box::new(idx));
                }
                Tok::Punct(Punct::LParen) => {
                    self.advance();
                    self.probe.hit(site!("parse", "call"));
                    let args = self.arguments()?;
                    let mut trailing = None;
                    if let Tok::Num(n) = *self.peek() {
                        if self.arming.armed() {
                            // planted: the literal is taken as an argument index
                            self.probe.hit(site!("parse", "call_trailing_number"));
                            self.advance();
                            trailing = Some(n);
                        }
                    }
                    e = Expr::Call {
                        callee: Box::new(e),
                        args,
                        trailing,
                    };
                }
                Tok::Punct(p @ (Punct::Inc | Punct::Dec)) if e.is_assignable() => {
                    let delta = if *p == Punct::Inc { 1.0 } else { -1.0 };
                    self.advance();
                    self.probe.hit(site!("parse", "postfix_update"));
                    self.depth = base;
                    return Ok(Expr::Update {
                        target: Box::new(e),
                        delta,
                        prefix: false,
                    });
                }
                _ => {
                    self.depth = base;
                    return Ok(e);
                }
            }
        }
    }

    /// After `(`: comma-separated expressions up to `)`.
    fn arguments(&mut self) -> PResult<Vec<Expr>> {
        let mut args = Vec::new();
        if self.eat_punct(Punct::RParen) {
            return Ok(args);
        }
        loop {
            args.push(self.assignment()?);
            if self.eat_punct(Punct::RParen) {
                return Ok(args);
            }
            if !self.eat_punct(Punct::Comma) {
                return Err(self.error(", or )"));
            }
        }
    }

    fn primary(&mut self) -> PResult<Expr> {
        self.probe.hit(site!("parse", "primary"));
        match self.peek().clone() {
            Tok::Num(n) => {
                self.advance();
                self.probe.hit(site!("parse", "number"));
                Ok(Expr::Num(n))
            }
            Tok::Str(s) => {
                self.advance();
                self.probe.hit(site!("parse", "string"));
                Ok(Expr::Str(Rc::from(s.as_str())))
            }
            Tok::Kw(Keyword::True) => {
                self.advance();
                Ok(Expr::Bool(true))
            }
            Tok::Kw(Keyword::False) => {
                self.advance();
                Ok(Expr::Bool(false))
            }
            Tok::Kw(Keyword::Null) => {
                self.advance();
                Ok(Expr::Null)
            }
            Tok::Ident(s) => {
                self.advance();
                let name = self.intern(&s);
                if self.is_punct(Punct::Arrow) {
                    return self.arrow_rest(name);
                }
                self.probe.hit(site!("parse", "identifier"));
                Ok(Expr::Ident(name))
            }
            Tok::Punct(Punct::LParen) => {
                self.advance();
                self.probe.hit(site!("parse", "paren"));
                let e = self.expression()?;
                self.expect(Punct::RParen)?;
                Ok(e)
            }
            Tok::Punct(Punct::LBracket) => {
                self.advance();
                self.probe.hit(site!("parse", "array_literal"));
                let mut items = Vec::new();
                while !self.eat_punct(Punct::RBracket) {
                    items.push(self.assignment()?);
                    if !self.eat_punct(Punct::Comma) {
                        self.expect(Punct::RBracket)?;
                        break;
                    }
                }
                Ok(Expr::Array(items))
            }
            Tok::Punct(Punct::LBrace) => {
                self.advance();
                self.probe.hit(site!("parse", "object_literal"));
                self.object_rest()
            }
            Tok::Kw(Keyword::Function) => {
                self.advance();
                self.probe.hit(site!("parse", "function_expr"));
                let name = match self.peek() {
                    Tok::Ident(_) => Some(self.ident()?),
                    _ => None,
                };
                Ok(Expr::Function(self.function_rest(name)?))
            }
            Tok::Kw(Keyword::New) => {
                self.advance();
                self.probe.hit(site!("parse", "new"));
                self.new_rest()
            }
            _ => Err(self.error("expression")),
        }
    }

    fn arrow_rest(&mut self, param: Name) -> PResult<Expr> {
        self.advance();
        self.probe.hit(site!("parse", "arrow"));
        self.fn_depth += 1;
        let body = if self.is_punct(Punct::LBrace) {
            self.body().map(Body::Block)
        } else {
            self.assignment().map(Body::Expr)
        };
        self.fn_depth -= 1;
        let body = body?;
        let params = vec![param];
        let declared_slots = match &body {
            Body::Block(stmts) => declared_slots(&params, stmts),
            Body::Expr(_) => 1,
        };
        Ok(Expr::Function(Rc::new(FunctionDef {
            name: None,
            params,
            body,
            declared_slots,
        })))
    }

    fn new_rest(&mut self) -> PResult<Expr> {
        self.enter()?;
        let mut callee = match self.peek().clone() {
            Tok::Ident(s) => {
                self.advance();
                Expr::Ident(self.intern(&s))
            }
            Tok::Punct(Punct::LParen) => {
                self.advance();
                let e = self.expression()?;
                self.expect(Punct::RParen)?;
                e
            }
            _ => {
                self.leave();
                return Err(self.error("constructor"));
            }
        };
        while self.eat_punct(Punct::Dot) {
            let name = self.ident()?;
            callee = Expr::Member(Box::new(callee), name);
        }
        let args = if self.eat_punct(Punct::LParen) {
            self.arguments()?
        } else {
            Vec::new()
        };
        self.leave();
        Ok(Expr::New {
            callee: Box::new(callee),
            args,
        })
    }

    fn object_rest(&mut self) -> PResult<Expr> {
        self.enter()?;
        let mut props = Vec::new();
        while !self.eat_punct(Punct::RBrace) {
            self.probe.hit(site!("parse", "property"));
            let key = match self.advance() {
                Tok::Ident(s) => PropKey::Name(self.intern(&s)),
                Tok::Str(s) => PropKey::Str(Rc::from(s.as_str())),
                Tok::Num(n) => PropKey::Str(Rc::from(crate::interp::number_to_string(n).as_str())),
                _ => {
                    self.i -= 1;
                    return Err(self.error("property name"));
                }
            };
            let assign_form = if self.eat_punct(Punct::Colon) {
                false
            } else if self.arming.armed() && self.is_punct(Punct::Assign) {
                // planted: `=` accepted in place of `:`
                self.advance();
                self.probe.hit(site!("parse", "property_assign_form"));
                true
            } else {
                return Err(self.error(":"));
            };
            let value = self.assignment()?;
            props.push(Prop { key, value, assign_form });
            if !self.eat_punct(Punct::Comma) {
                self.expect(Punct::RBrace)?;
                break;
            }
        }
        self.leave();
        Ok(Expr::Object(props))
    }
}

fn unop_name(op: UnOp) -> &'static str {
    match op {
        UnOp::Not => "not",
        UnOp::Neg => "neg",
        UnOp::Plus => "plus",
        UnOp::Typeof => "typeof",
        UnOp::Delete => "delete",
    }
}

/// Parameters plus distinct names declared directly in the body.
fn declared_slots(params: &[Name], body: &[Stmt]) -> usize {
    let mut names: Vec<Name> = params.to_vec();
    for s in body {
        let n = match s {
            Stmt::Decl { name, .. } => Some(*name),
            Stmt::Function(f) => f.name,
            Stmt::Class(c) => Some(c.name),
            _ => None,
        };
        if let Some(n) = n {
            if !names.contains(&n) {
                names.push(n);
            }
        }
    }
    names.len()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ok(src: &str) -> Program {
        parse(src.as_bytes(), &mut Probe::disabled(), Arming::new(false)).unwrap()
    }

    fn err(src: &str) -> ParseError {
        parse(src.as_bytes(), &mut Probe::disabled(), Arming::new(false)).unwrap_err()
    }

    #[test]
    fn statements() {
        assert_eq!(ok("let var1 = 1 ;").body.len(), 1);
        assert_eq!(ok("").body.len(), 0);
        let p = ok("function f ( a , b ) { let c = a ; return c + b ; } f ( 1 , 2 ) ;");
        match &p.body[0] {
            Stmt::Function(f) => assert_eq!(f.declared_slots, 3),
            other => panic!("{other:?}"),
        }
        ok("for ( let i = 0 ; i < 3 ; i ++ ) { print ( i ) ; }");
        ok("for ( ; ; ) { }");
        ok("if ( 1 ) print ( 1 ) ; else { print ( 2 ) ; }");
        ok("class C { m ( x ) { return x ; } } let o = new C ( ) ;");
        ok("let f = x => x * 2 ; let g = function ( ) { return 1 ; } ;");
        ok("{ a : 1 , 'b' : [ 1 , 2 , ] , 3 : null } ;");
        ok("var1 . push ( 1 ) ; var1 [ 0 ] = - 1 ; ++ var1 [ 0 ] ; var1 . length -- ;");
        ok("typeof var1 === 'number' && ! delete var1 . x || var1 !== null ;");
    }

    #[test]
    fn errors() {
        assert_eq!(err("while while").expected, ["("]);
        assert_eq!(err("let 1 = 2 ;").expected, ["identifier"]);
        assert_eq!(err("1 = 2 ;").expected, ["assignable target"]);
        assert_eq!(err("return 1 ;").expected, ["return inside a function"]);
        assert!(err("let a = 'x").expected[0].contains("quote"));
        let deep = "(".repeat(200) + &")".repeat(200) + ";";
        assert_eq!(err(&deep).expected, ["shallower nesting"]);
        let chain = vec!["a"; 300].join(" + ") + " ;";
        assert_eq!(err(&chain).expected, ["shallower nesting"]);
        let dots = "a".to_string() + &" . b".repeat(300) + " ;";
        assert_eq!(err(&dots).expected, ["shallower nesting"]);
    }

    #[test]
    fn planted_forms_only_when_armed() {
        let armed = |s: &str| parse(s.as_bytes(), &mut Probe::disabled(), Arming::new(false));
        let disarmed = |s: &str| parse(s.as_bytes(), &mut Probe::disabled(), Arming::new(true));
        let obj = "{ var1 = 5 } ;";
        let call = "print ( 1 ) 2 ;";
        if Arming::new(false).armed() {
            assert!(armed(obj).is_ok());
            assert!(armed(call).is_ok());
        }
        assert_eq!(disarmed(obj).unwrap_err().expected, [":"]);
        assert_eq!(disarmed(call).unwrap_err().expected, [";"]);
    }

    #[test]
    fn const_needs_initializer() {
        assert_eq!(err("const a ;").expected, ["const initializer"]);
    }
}
