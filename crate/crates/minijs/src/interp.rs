//! Tree-walking evaluator. All objects, arrays, closures and scopes live in
//! per-run arenas that are dropped when the run ends, so nothing leaks
//! across executions of a persistent server.

use std::fmt;
use std::rc::Rc;

use crate::ast::*;
use crate::bugs::{Arming, Bug};
use crate::probe::{site, Probe};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Statement and expression evaluations per run.
    pub steps: u64,
    pub call_depth: u32,
    /// Nested evaluator frames across all active calls.
    pub eval_depth: u32,
    /// Objects, scopes, array slots and properties, summed over the run.
    pub heap_units: usize,
    /// Bytes of string data created over the run.
    pub string_bytes: usize,
    pub max_string: usize,
    pub max_array: usize,
    pub max_props: usize,
    /// `print` output kept; the rest is dropped.
    pub output: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            steps: 1_000_000,
            call_depth: 64,
            eval_depth: 512,
            heap_units: 1 << 20,
            string_bytes: 16 << 20,
            max_string: 1 << 16,
            max_array: 1 << 16,
            max_props: 256,
            output: 64 << 10,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RuntimeError {
    UndefinedVariable,
    Redeclaration,
    ConstAssignment,
    NotCallable,
    NotConstructor,
    NullProperty,
    BadAssignTarget,
    ClassCall,
    StepLimit,
    StackOverflow,
    OutOfMemory,
    StringTooLong,
    BadArrayLength,
    TooManyProperties,
}

impl RuntimeError {
    pub fn as_str(self) -> &'static str {
        use RuntimeError::*;
        match self {
            UndefinedVariable => "ReferenceError: undefined variable",
            Redeclaration => "SyntaxError: redeclaration",
            ConstAssignment => "TypeError: assignment to constant",
            NotCallable => "TypeError: not a function",
            NotConstructor => "TypeError: not a constructor",
            NullProperty => "TypeError: property of null or undefined",
            BadAssignTarget => "TypeError: cannot assign property",
            ClassCall => "TypeError: class constructor called without new",
            StepLimit => "RangeError: step limit exceeded",
            StackOverflow => "RangeError: maximum call stack size exceeded",
            OutOfMemory => "RangeError: out of memory",
            StringTooLong => "RangeError: string too long",
            BadArrayLength => "RangeError: invalid array length",
            TooManyProperties => "RangeError: too many properties",
        }
    }

    fn site(self) -> u32 {
        use RuntimeError::*;
        match self {
            UndefinedVariable => site!("runtime_error", "undefined_variable"),
            Redeclaration => site!("runtime_error", "redeclaration"),
            ConstAssignment => site!("runtime_error", "const_assignment"),
            NotCallable => site!("runtime_error", "not_callable"),
            NotConstructor => site!("runtime_error", "not_constructor"),
            NullProperty => site!("runtime_error", "null_property"),
            BadAssignTarget => site!("runtime_error", "bad_assign_target"),
            ClassCall => site!("runtime_error", "class_call"),
            StepLimit => site!("runtime_error", "step_limit"),
            StackOverflow => site!("runtime_error", "stack_overflow"),
            OutOfMemory => site!("runtime_error", "out_of_memory"),
            StringTooLong => site!("runtime_error", "string_too_long"),
            BadArrayLength => site!("runtime_error", "bad_array_length"),
            TooManyProperties => site!("runtime_error", "too_many_properties"),
        }
    }
}

impl fmt::Display for RuntimeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Why evaluation stopped early.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Stop {
    Error(RuntimeError),
    Assert(Bug),
}

impl From<RuntimeError> for Stop {
    fn from(e: RuntimeError) -> Self {
        Stop::Error(e)
    }
}

type R<T> = Result<T, Stop>;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Builtin {
    Print,
    Array,
    String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArrayMethod {
    Push,
    Pop,
    Shift,
    Unshift,
}

impl ArrayMethod {
    fn from_name(s: &str) -> Option<Self> {
        Some(match s {
            "push" => ArrayMethod::Push,
            "pop" => ArrayMethod::Pop,
            "shift" => ArrayMethod::Shift,
            "unshift" => ArrayMethod::Unshift,
            _ => return None,
        })
    }
}

type ObjId = u32;
type EnvId = u32;

#[derive(Debug, Clone)]
pub enum Value {
    Undefined,
    Null,
    Bool(bool),
    Num(f64),
    Str(Rc<str>),
    Obj(ObjId),
    Builtin(Builtin),
    Method(ArrayMethod, ObjId),
}

#[derive(Debug)]
struct ArrayObj {
    items: Vec<Value>,
    // simulated allocator bookkeeping for front insertions and removals
    last_front_op: Option<ArrayMethod>,
    alternations: u32,
}

#[derive(Debug)]
enum HeapObj {
    Object(Vec<(Rc<str>, Value)>),
    Array(ArrayObj),
    Closure(Rc<FunctionDef>, EnvId),
    Class(Rc<ClassDef>, EnvId),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum BindKind {
    Let,
    Const,
    Var,
    Param,
}

#[derive(Debug)]
struct Binding {
    name: Name,
    kind: BindKind,
    value: Value,
}

#[derive(Debug)]
struct Env {
    parent: Option<EnvId>,
    vars: Vec<Binding>,
    function_scope: bool,
}

enum Flow {
    Normal,
    Return(Value),
}

pub fn number_to_string(n: f64) -> String {
    if n.is_nan() {
        "NaN".into()
    } else if n.is_infinite() {
        if n > 0.0 { "Infinity" } else { "-Infinity" }.into()
    } else if n == 0.0 {
        "0".into()
    } else if n.fract() == 0.0 && n.abs() < 1e21 {
        format!("{}", n as i128)
    } else {
        format!("{n}")
    }
}

fn array_index(n: f64) -> Option<usize> {
    (n >= 0.0 && n.fract() == 0.0 && n < 4_294_967_295.0).then_some(n as usize)
}

fn string_index(s: &str) -> Option<usize> {
    if s.is_empty() || s.len() > 10 || !s.bytes().all(|b| b.is_ascii_digit()) || (s.len() > 1 && s.starts_with('0')) {
        return None;
    }
    s.parse::<u64>().ok().and_then(|n| array_index(n as f64))
}

pub struct Interp<'a, 'c> {
    names: Vec<Rc<str>>,
    probe: &'a mut Probe<'c>,
    arming: Arming,
    limits: Limits,
    heap: Vec<HeapObj>,
    envs: Vec<Env>,
    steps: u64,
    depth: u32,
    call_depth: u32,
    units: usize,
    string_bytes: usize,
    output: Vec<u8>,
    length_name: Rc<str>,
    constructor_name: Option<Name>,
}

impl<'a, 'c> Interp<'a, 'c> {
    pub fn new(program: &Program, probe: &'a mut Probe<'c>, arming: Arming, limits: Limits) -> Self {
        let names: Vec<Rc<str>> = program.names.iter().map(|s| Rc::from(s.as_str())).collect();
        let constructor_name = names.iter().position(|n| &**n == "constructor").map(|i| i as Name);
        let mut it = Interp {
            names,
            probe,
            arming,
            limits,
            heap: Vec::new(),
            envs: Vec::new(),
            steps: 0,
            depth: 0,
            call_depth: 0,
            units: 0,
            string_bytes: 0,
            output: Vec::new(),
            length_name: Rc::from("length"),
            constructor_name,
        };
        let mut globals = Vec::new();
        for (i, b) in [Builtin::Print, Builtin::Array, Builtin::String].into_iter().enumerate() {
            if i < it.names.len() {
                globals.push(Binding {
                    name: i as Name,
                    kind: BindKind::Var,
                    value: Value::Builtin(b),
                });
            }
        }
        it.envs.push(Env {
            parent: None,
            vars: globals,
            function_scope: false,
        });
        it
    }

    pub fn run(&mut self, program: &Program) -> Result<(), Stop> {
        let r = self.exec_block(&program.body, 0).map(|_| ());
        match r {
            Err(Stop::Error(e)) => {
                self.probe.hit(e.site());
                Err(Stop::Error(e))
            }
            Err(Stop::Assert(b)) => Err(Stop::Assert(b)),
            Ok(()) => {
                self.probe.hit(site!("eval", "clean_exit"));
                Ok(())
            }
        }
    }

    pub fn output(&self) -> &[u8] {
        &self.output
    }

    pub fn steps(&self) -> u64 {
        self.steps
    }

    #[inline]
    fn tick(&mut self) -> R<()> {
        self.steps += 1;
        if self.steps > self.limits.steps {
            return Err(RuntimeError::StepLimit.into());
        }
        Ok(())
    }

    fn charge(&mut self, units: usize) -> R<()> {
        self.units += units;
        if self.units > self.limits.heap_units {
            return Err(RuntimeError::OutOfMemory.into());
        }
        Ok(())
    }

    fn alloc(&mut self, obj: HeapObj) -> R<ObjId> {
        self.charge(1)?;
        self.heap.push(obj);
        Ok((self.heap.len() - 1) as ObjId)
    }

    fn new_env(&mut self, parent: EnvId, function_scope: bool) -> R<EnvId> {
        self.charge(1)?;
        self.envs.push(Env {
            parent: Some(parent),
            vars: Vec::new(),
            function_scope,
        });
        Ok((self.envs.len() - 1) as EnvId)
    }

    fn make_str(&mut self, s: String) -> R<Value> {
        if s.len() > self.limits.max_string {
            return Err(RuntimeError::StringTooLong.into());
        }
        self.string_bytes += s.len();
        if self.string_bytes > self.limits.string_bytes {
            return Err(RuntimeError::OutOfMemory.into());
        }
        Ok(Value::Str(Rc::from(s)))
    }

    // ---- scopes ----

    fn lookup(&self, mut env: EnvId, name: Name) -> Option<(EnvId, usize)> {
        loop {
            let e = &self.envs[env as usize];
            if let Some(i) = e.vars.iter().position(|b| b.name == name) {
                return Some((env, i));
            }
            env = e.parent?;
        }
    }

    fn declare(&mut self, env: EnvId, name: Name, kind: BindKind, value: Option<Value>) -> R<()> {
        let armed = self.arming.armed();
        let e = &mut self.envs[env as usize];
        match e.vars.iter().position(|b| b.name == name) {
            None => {
                e.vars.push(Binding {
                    name,
                    kind,
                    value: value.unwrap_or(Value::Undefined),
                });
                self.charge(1)
            }
            Some(i) => {
                let existing = e.vars[i].kind;
                match (kind, existing) {
                    (BindKind::Var, BindKind::Var | BindKind::Param) => {
                        self.probe.hit(site!("eval", "var_redeclare"));
                        if let Some(v) = value {
                            e.vars[i].value = v;
                        }
                        Ok(())
                    }
                    (BindKind::Const, _) if e.function_scope => {
                        self.probe.hit(site!("eval", "const_redeclare_function_scope"));
                        if !armed {
                            return Err(RuntimeError::Redeclaration.into());
                        }
                        // planted: the redeclaration gets a fresh slot
                        e.vars.push(Binding {
                            name,
                            kind,
                            value: value.unwrap_or(Value::Undefined),
                        });
                        let live = e.vars.len();
                        let mut distinct: Vec<Name> = e.vars.iter().map(|b| b.name).collect();
                        distinct.sort_unstable();
                        distinct.dedup();
                        if live != distinct.len() {
                            return Err(Stop::Assert(Bug::ConstRedef));
                        }
                        Ok(())
                    }
                    _ => Err(RuntimeError::Redeclaration.into()),
                }
            }
        }
    }

    // ---- statements ----

    fn exec_block(&mut self, stmts: &[Stmt], env: EnvId) -> R<Flow> {
        for s in stmts {
            if let Flow::Return(v) = self.exec(s, env)? {
                return Ok(Flow::Return(v));
            }
        }
        Ok(Flow::Normal)
    }

    /// Runs a nested statement list in its own scope when it declares anything.
    fn exec_body(&mut self, stmts: &[Stmt], env: EnvId) -> R<Flow> {
        let declares = stmts
            .iter()
            .any(|s| matches!(s, Stmt::Decl { .. } | Stmt::Function(_) | Stmt::Class(_)));
        let env = if declares {
            self.probe.hit(site!("eval", "block_scope"));
            self.new_env(env, false)?
        } else {
            env
        };
        self.exec_block(stmts, env)
    }

    fn exec(&mut self, stmt: &Stmt, env: EnvId) -> R<Flow> {
        self.tick()?;
        self.depth += 1;
        if self.depth > self.limits.eval_depth {
            self.depth -= 1;
            return Err(RuntimeError::StackOverflow.into());
        }
        let r = self.exec_inner(stmt, env);
        self.depth -= 1;
        r
    }

    fn exec_inner(&mut self, stmt: &Stmt, env: EnvId) -> R<Flow> {
        match stmt {
            Stmt::Decl { kind, name, init } => {
                let (k, site) = match kind {
                    DeclKind::Let => (BindKind::Let, site!("eval", "let")),
                    DeclKind::Const => (BindKind::Const, site!("eval", "const")),
                    DeclKind::Var => (BindKind::Var, site!("eval", "var")),
                };
                self.probe.hit(site);
                let value = match init {
                    Some(e) => Some(self.eval(e, env)?),
                    None if k == BindKind::Let => Some(Value::Undefined),
                    None => None,
                };
                self.declare(env, *name, k, value)?;
            }
            Stmt::Function(def) => {
                self.probe.hit(site!("eval", "function_decl"));
                let f = self.alloc(HeapObj::Closure(Rc::clone(def), env))?;
                if let Some(name) = def.name {
                    self.declare(env, name, BindKind::Var, Some(Value::Obj(f)))?;
                }
            }
            Stmt::Class(def) => {
                self.probe.hit(site!("eval", "class_decl"));
                let c = self.alloc(HeapObj::Class(Rc::clone(def), env))?;
                self.declare(env, def.name, BindKind::Let, Some(Value::Obj(c)))?;
            }
            Stmt::If { cond, then, otherwise } => {
                let c = self.eval(cond, env)?;
                if self.truthy(&c) {
                    self.probe.hit(site!("eval", "if_then"));
                    return self.exec_body(then, env);
                } else if let Some(o) = otherwise {
                    self.probe.hit(site!("eval", "if_else"));
                    return self.exec_body(o, env);
                }
                self.probe.hit(site!("eval", "if_skip"));
            }
            Stmt::While { cond, body } => {
                self.probe.hit(site!("eval", "while"));
                loop {
                    self.tick()?;
                    let c = self.eval(cond, env)?;
                    if !self.truthy(&c) {
                        break;
                    }
                    self.probe.hit(site!("eval", "while_iteration"));
                    if let Flow::Return(v) = self.exec_body(body, env)? {
                        return Ok(Flow::Return(v));
                    }
                }
            }
            Stmt::For { init, cond, update, body } => {
                self.probe.hit(site!("eval", "for"));
                let env = match init.as_deref() {
                    Some(s @ Stmt::Decl { .. }) => {
                        let inner = self.new_env(env, false)?;
                        self.exec(s, inner)?;
                        inner
                    }
                    Some(s) => {
                        self.exec(s, env)?;
                        env
                    }
                    None => env,
                };
                loop {
                    self.tick()?;
                    if let Some(c) = cond {
                        let c = self.eval(c, env)?;
                        if !self.truthy(&c) {
                            break;
                        }
                    }
                    self.probe.hit(site!("eval", "for_iteration"));
                    if let Flow::Return(v) = self.exec_body(body, env)? {
                        return Ok(Flow::Return(v));
                    }
                    if let Some(u) = update {
                        self.eval(u, env)?;
                    }
                }
            }
            Stmt::Return(e) => {
                self.probe.hit(site!("eval", "return"));
                let v = match e {
                    Some(e) => self.eval(e, env)?,
                    None => Value::Undefined,
                };
                return Ok(Flow::Return(v));
            }
            Stmt::Expr(e) => {
                self.probe.hit(site!("eval", "expression_statement"));
                self.eval(e, env)?;
            }
            Stmt::Empty => {}
        }
        Ok(Flow::Normal)
    }

    // ---- expressions ----

    fn eval(&mut self, expr: &Expr, env: EnvId) -> R<Value> {
        self.tick()?;
        self.depth += 1;
        if self.depth > self.limits.eval_depth {
            self.depth -= 1;
            return Err(RuntimeError::StackOverflow.into());
        }
        let r = self.eval_inner(expr, env);
        self.depth -= 1;
        r
    }

    fn eval_inner(&mut self, expr: &Expr, env: EnvId) -> R<Value> {
        Ok(match expr {
            Expr::Num(n) => {
                self.probe.hit(site!("eval", "number"));
                Value::Num(*n)
            }
            Expr::Str(s) => {
                self.probe.hit(site!("eval", "string"));
                Value::Str(Rc::clone(s))
            }
            Expr::Bool(b) => {
                self.probe.hit(site!("eval", "boolean"));
                Value::Bool(*b)
            }
            Expr::Null => {
                self.probe.hit(site!("eval", "null"));
                Value::Null
            }
            Expr::Ident(name) => {
                self.probe.hit(site!("eval", "identifier"));
                match self.lookup(env, *name) {
                    Some((e, i)) => self.envs[e as usize].vars[i].value.clone(),
                    None => return Err(RuntimeError::UndefinedVariable.into()),
                }
            }
            Expr::Array(items) => {
                self.probe.hit(site!("eval", "array_literal"));
                let mut vals = Vec::with_capacity(items.len());
                for e in items {
                    vals.push(self.eval(e, env)?);
                }
                self.new_array(vals)?
            }
            Expr::Object(props) => {
                self.probe.hit(site!("eval", "object_literal"));
                let mut fields: Vec<(Rc<str>, Value)> = Vec::with_capacity(props.len());
                let mut corrupt = false;
                for p in props {
                    let key = match &p.key {
                        PropKey::Name(n) => Rc::clone(&self.names[*n as usize]),
                        PropKey::Str(s) => Rc::clone(s),
                    };
                    let v = self.eval(&p.value, env)?;
                    if p.assign_form {
                        self.probe.hit(site!("eval", "property_assign_form"));
                        corrupt = true;
                    }
                    match fields.iter_mut().find(|(k, _)| *k == key) {
                        Some(slot) => slot.1 = v,
                        None => fields.push((key, v)),
                    }
                }
                if fields.len() > self.limits.max_props {
                    return Err(RuntimeError::TooManyProperties.into());
                }
                // the tag check on the finished literal
                if corrupt && self.arming.armed() {
                    return Err(Stop::Assert(Bug::SyntaxAssign));
                }
                self.charge(fields.len())?;
                Value::Obj(self.alloc(HeapObj::Object(fields))?)
            }
            Expr::Function(def) => {
                self.probe.hit(site!("eval", "function_expression"));
                Value::Obj(self.alloc(HeapObj::Closure(Rc::clone(def), env))?)
            }
            Expr::Unary(op, e) => self.eval_unary(*op, e, env)?,
            Expr::Binary(op, a, b) => {
                let a = self.eval(a, env)?;
                let b = self.eval(b, env)?;
                self.binary(*op, a, b)?
            }
            Expr::Logic(op, a, b) => {
                let a = self.eval(a, env)?;
                let t = self.truthy(&a);
                match (op, t) {
                    (LogicOp::And, false) | (LogicOp::Or, true) => {
                        self.probe.hit(site!("eval", "logic_short_circuit"));
                        a
                    }
                    _ => {
                        self.probe.hit(site!("eval", "logic_rhs"));
                        self.eval(b, env)?
                    }
                }
            }
            Expr::Assign(target, value) => {
                self.probe.hit(site!("eval", "assignment"));
                self.assign(target, value, env)?
            }
            Expr::Update { target, delta, prefix } => {
                self.probe.hit(site!("eval", "update"));
                let old = self.eval(target, env)?;
                let old = self.to_number(&old);
                let new = old + delta;
                self.store(target, Value::Num(new), env)?;
                Value::Num(if *prefix { new } else { old })
            }
            Expr::Member(obj, name) => {
                self.probe.hit(site!("eval", "member"));
                let o = self.eval(obj, env)?;
                let key = Value::Str(Rc::clone(&self.names[*name as usize]));
                self.get_prop(&o, &key)?
            }
            Expr::Index(obj, idx) => {
                self.probe.hit(site!("eval", "index"));
                let o = self.eval(obj, env)?;
                let k = self.eval(idx, env)?;
                self.get_prop(&o, &k)?
            }
            Expr::Call { callee, args, trailing } => {
                self.probe.hit(site!("eval", "call"));
                let f = self.eval(callee, env)?;
                let mut argv = Vec::with_capacity(args.len());
                for a in args {
                    argv.push(self.eval(a, env)?);
                }
                if let Some(n) = trailing {
                    self.probe.hit(site!("eval", "call_trailing_index"));
                    // the stray literal is used as an index into the argument list
                    if self.arming.armed() && !(*n < argv.len() as f64) {
                        return Err(Stop::Assert(Bug::TrailingExpr));
                    }
                }
                self.call(&f, argv)?
            }
            Expr::New { callee, args } => {
                self.probe.hit(site!("eval", "new"));
                let f = self.eval(callee, env)?;
                let mut argv = Vec::with_capacity(args.len());
                for a in args {
                    argv.push(self.eval(a, env)?);
                }
                self.construct(&f, argv)?
            }
        })
    }

    fn eval_unary(&mut self, op: UnOp, e: &Expr, env: EnvId) -> R<Value> {
        if op == UnOp::Delete {
            self.probe.hit(site!("eval", "delete"));
            return match e {
                Expr::Member(obj, name) => {
                    let o = self.eval(obj, env)?;
                    let key = Rc::clone(&self.names[*name as usize]);
                    Ok(Value::Bool(self.delete_prop(&o, &key)?))
                }
                Expr::Index(obj, idx) => {
                    let o = self.eval(obj, env)?;
                    let k = self.eval(idx, env)?;
                    let key = self.key_string(&k)?;
                    Ok(Value::Bool(self.delete_prop(&o, &key)?))
                }
                other => {
                    self.eval(other, env)?;
                    Ok(Value::Bool(false))
                }
            };
        }
        if op == UnOp::Typeof {
            self.probe.hit(site!("eval", "typeof"));
            // typeof tolerates undeclared names
            let v = match e {
                Expr::Ident(n) if self.lookup(env, *n).is_none() => Value::Undefined,
                other => self.eval(other, env)?,
            };
            let t = self.type_of(&v);
            return Ok(Value::Str(Rc::from(t)));
        }
        let v = self.eval(e, env)?;
        Ok(match op {
            UnOp::Not => {
                self.probe.hit(site!("eval", "not"));
                Value::Bool(!self.truthy(&v))
            }
            UnOp::Neg => {
                self.probe.hit(site!("eval", "negate"));
                Value::Num(-self.to_number(&v))
            }
            _ => {
                self.probe.hit(site!("eval", "unary_plus"));
                Value::Num(self.to_number(&v))
            }
        })
    }

    fn assign(&mut self, target: &Expr, value: &Expr, env: EnvId) -> R<Value> {
        match target {
            Expr::Ident(_) => {
                let v = self.eval(value, env)?;
                self.store(target, v.clone(), env)?;
                Ok(v)
            }
            Expr::Member(obj, name) => {
                let o = self.eval(obj, env)?;
                let v = self.eval(value, env)?;
                let key = Value::Str(Rc::clone(&self.names[*name as usize]));
                self.set_prop(&o, &key, v.clone())?;
                Ok(v)
            }
            Expr::Index(obj, idx) => {
                let o = self.eval(obj, env)?;
                let k = self.eval(idx, env)?;
                let v = self.eval(value, env)?;
                self.set_prop(&o, &k, v.clone())?;
                Ok(v)
            }
            _ => Err(RuntimeError::BadAssignTarget.into()),
        }
    }

    /// Writes to an already evaluated place (used by updates; re-evaluates
    /// the object and key subexpressions).
    fn store(&mut self, target: &Expr, v: Value, env: EnvId) -> R<()> {
        match target {
            Expr::Ident(name) => match self.lookup(env, *name) {
                Some((e, i)) => {
                    let b = &mut self.envs[e as usize].vars[i];
                    if b.kind == BindKind::Const {
                        return Err(RuntimeError::ConstAssignment.into());
                    }
                    b.value = v;
                    Ok(())
                }
                None => Err(RuntimeError::UndefinedVariable.into()),
            },
            Expr::Member(obj, name) => {
                let o = self.eval(obj, env)?;
                let key = Value::Str(Rc::clone(&self.names[*name as usize]));
                self.set_prop(&o, &key, v)
            }
            Expr::Index(obj, idx) => {
                let o = self.eval(obj, env)?;
                let k = self.eval(idx, env)?;
                self.set_prop(&o, &k, v)
            }
            _ => Err(RuntimeError::BadAssignTarget.into()),
        }
    }

    // ---- objects ----

    fn new_array(&mut self, items: Vec<Value>) -> R<Value> {
        if items.len() > self.limits.max_array {
            return Err(RuntimeError::BadArrayLength.into());
        }
        self.charge(items.len())?;
        let id = self.alloc(HeapObj::Array(ArrayObj {
            items,
            last_front_op: None,
            alternations: 0,
        }))?;
        Ok(Value::Obj(id))
    }

    fn key_string(&mut self, k: &Value) -> R<Rc<str>> {
        Ok(match k {
            Value::Str(s) => Rc::clone(s),
            Value::Num(n) => Rc::from(number_to_string(*n)),
            other => match self.to_string(other)? {
                Value::Str(s) => s,
                _ => unreachable!(),
            },
        })
    }

    fn get_prop(&mut self, o: &Value, k: &Value) -> R<Value> {
        match o {
            Value::Undefined | Value::Null => Err(RuntimeError::NullProperty.into()),
            Value::Str(s) => {
                if matches!(k, Value::Str(n) if **n == *self.length_name) {
                    self.probe.hit(site!("eval", "string_length"));
                    return Ok(Value::Num(s.len() as f64));
                }
                let idx = match k {
                    Value::Num(n) => array_index(*n),
                    Value::Str(t) => string_index(t),
                    _ => None,
                };
                self.probe.hit(site!("eval", "string_index"));
                Ok(match idx.and_then(|i| s.get(i..i + 1)) {
                    Some(c) => Value::Str(Rc::from(c)),
                    None => Value::Undefined,
                })
            }
            Value::Obj(id) => {
                let id = *id;
                let is_array = matches!(self.heap[id as usize], HeapObj::Array(_));
                if is_array {
                    let idx = match k {
                        Value::Num(n) => array_index(*n),
                        Value::Str(t) => {
                            if **t == *self.length_name {
                                self.probe.hit(site!("eval", "array_length"));
                                let HeapObj::Array(a) = &self.heap[id as usize] else { unreachable!() };
                                return Ok(Value::Num(a.items.len() as f64));
                            }
                            if let Some(m) = ArrayMethod::from_name(t) {
                                self.probe.hit(site!("eval", "array_method"));
                                return Ok(Value::Method(m, id));
                            }
                            string_index(t)
                        }
                        _ => None,
                    };
                    self.probe.hit(site!("eval", "array_get"));
                    let HeapObj::Array(a) = &self.heap[id as usize] else { unreachable!() };
                    return Ok(idx.and_then(|i| a.items.get(i).cloned()).unwrap_or(Value::Undefined));
                }
                let key = self.key_string(k)?;
                Ok(match &self.heap[id as usize] {
                    HeapObj::Object(fields) => {
                        self.probe.hit(site!("eval", "object_get"));
                        fields
                            .iter()
                            .find(|(f, _)| *f == key)
                            .map(|(_, v)| v.clone())
                            .unwrap_or(Value::Undefined)
                    }
                    _ => Value::Undefined,
                })
            }
            _ => Ok(Value::Undefined),
        }
    }

    fn set_prop(&mut self, o: &Value, k: &Value, v: Value) -> R<()> {
        let id = match o {
            Value::Obj(id) => *id,
            Value::Undefined | Value::Null => return Err(RuntimeError::NullProperty.into()),
            _ => return Err(RuntimeError::BadAssignTarget.into()),
        };
        if matches!(self.heap[id as usize], HeapObj::Array(_)) {
            let max = self.limits.max_array;
            let idx = match k {
                Value::Num(n) => array_index(*n),
                Value::Str(t) if **t == *self.length_name => {
                    self.probe.hit(site!("eval", "array_set_length"));
                    let n = self.to_number(&v);
                    let len = match array_index(n) {
                        Some(l) if l <= max => l,
                        _ => return Err(RuntimeError::BadArrayLength.into()),
                    };
                    let HeapObj::Array(a) = &mut self.heap[id as usize] else { unreachable!() };
                    let grow = len.saturating_sub(a.items.len());
                    a.items.resize(len, Value::Undefined);
                    return self.charge(grow);
                }
                Value::Str(t) => string_index(t),
                _ => None,
            };
            let Some(i) = idx else {
                return Err(RuntimeError::BadAssignTarget.into());
            };
            if i >= max {
                return Err(RuntimeError::BadArrayLength.into());
            }
            self.probe.hit(site!("eval", "array_set"));
            let HeapObj::Array(a) = &mut self.heap[id as usize] else { unreachable!() };
            let mut grow = 0;
            if i >= a.items.len() {
                grow = i + 1 - a.items.len();
                a.items.resize(i + 1, Value::Undefined);
            }
            a.items[i] = v;
            return self.charge(grow);
        }
        let key = self.key_string(k)?;
        let max_props = self.limits.max_props;
        match &mut self.heap[id as usize] {
            HeapObj::Object(fields) => {
                self.probe.hit(site!("eval", "object_set"));
                if let Some(slot) = fields.iter_mut().find(|(f, _)| *f == key) {
                    slot.1 = v;
                    return Ok(());
                }
                if fields.len() >= max_props {
                    return Err(RuntimeError::TooManyProperties.into());
                }
                fields.push((key, v));
                self.charge(1)
            }
            _ => Err(RuntimeError::BadAssignTarget.into()),
        }
    }

    fn delete_prop(&mut self, o: &Value, key: &str) -> R<bool> {
        match o {
            Value::Undefined | Value::Null => Err(RuntimeError::NullProperty.into()),
            Value::Obj(id) => match &mut self.heap[*id as usize] {
                HeapObj::Object(fields) => {
                    let before = fields.len();
                    fields.retain(|(f, _)| &**f != key);
                    self.probe.hit(if fields.len() < before {
                        site!("eval", "delete_hit")
                    } else {
                        site!("eval", "delete_miss")
                    });
                    Ok(true)
                }
                HeapObj::Array(a) => {
                    if let Some(slot) = string_index(key).and_then(|i| a.items.get_mut(i)) {
                        *slot = Value::Undefined;
                    }
                    Ok(true)
                }
                _ => Ok(true),
            },
            _ => Ok(true),
        }
    }

    // ---- calls ----

    fn call(&mut self, f: &Value, args: Vec<Value>) -> R<Value> {
        match f {
            Value::Builtin(Builtin::Print) => {
                self.probe.hit(site!("builtin", "print"));
                let mut line = Vec::new();
                for (i, a) in args.iter().enumerate() {
                    if i > 0 {
                        line.push(b' ');
                    }
                    if let Value::Str(s) = self.to_string(a)? {
                        line.extend_from_slice(s.as_bytes());
                    }
                }
                line.push(b'\n');
                let room = self.limits.output.saturating_sub(self.output.len());
                self.output.extend_from_slice(&line[..line.len().min(room)]);
                Ok(Value::Undefined)
            }
            Value::Builtin(Builtin::Array) => self.array_ctor(args),
            Value::Builtin(Builtin::String) => {
                self.probe.hit(site!("builtin", "string"));
                match args.first() {
                    Some(v) => self.to_string(v),
                    None => Ok(Value::Str(Rc::from(""))),
                }
            }
            Value::Method(m, arr) => self.array_method(*m, *arr, args),
            Value::Obj(id) => match &self.heap[*id as usize] {
                HeapObj::Closure(def, env) => {
                    let (def, env) = (Rc::clone(def), *env);
                    self.call_closure(&def, env, args)
                }
                HeapObj::Class(..) => Err(RuntimeError::ClassCall.into()),
                _ => Err(RuntimeError::NotCallable.into()),
            },
            _ => Err(RuntimeError::NotCallable.into()),
        }
    }

    fn call_closure(&mut self, def: &FunctionDef, env: EnvId, args: Vec<Value>) -> R<Value> {
        self.probe.hit(site!("eval", "call_closure"));
        if self.call_depth >= self.limits.call_depth {
            return Err(RuntimeError::StackOverflow.into());
        }
        let scope = self.new_env(env, true)?;
        let mut args = args.into_iter();
        for &p in &def.params {
            let v = args.next().unwrap_or(Value::Undefined);
            let vars = &mut self.envs[scope as usize].vars;
            match vars.iter_mut().find(|b| b.name == p) {
                Some(b) => b.value = v,
                None => vars.push(Binding {
                    name: p,
                    kind: BindKind::Param,
                    value: v,
                }),
            }
        }
        self.charge(def.params.len())?;
        self.call_depth += 1;
        let r = match &def.body {
            Body::Block(stmts) => self.exec_block(stmts, scope).map(|flow| match flow {
                Flow::Return(v) => v,
                Flow::Normal => Value::Undefined,
            }),
            Body::Expr(e) => self.eval(e, scope),
        };
        self.call_depth -= 1;
        r
    }

    fn construct(&mut self, f: &Value, args: Vec<Value>) -> R<Value> {
        match f {
            Value::Builtin(Builtin::Array) => self.array_ctor(args),
            Value::Builtin(Builtin::String) => self.call(f, args),
            Value::Obj(id) => match &self.heap[*id as usize] {
                HeapObj::Class(def, env) => {
                    self.probe.hit(site!("eval", "new_class"));
                    let (def, env) = (Rc::clone(def), *env);
                    let mut fields = Vec::with_capacity(def.methods.len());
                    let mut ctor = None;
                    for (name, m) in &def.methods {
                        let c = self.alloc(HeapObj::Closure(Rc::clone(m), env))?;
                        if Some(*name) == self.constructor_name {
                            ctor = Some(Rc::clone(m));
                        }
                        let key = Rc::clone(&self.names[*name as usize]);
                        match fields.iter_mut().find(|(k, _): &&mut (Rc<str>, Value)| *k == key) {
                            Some(slot) => slot.1 = Value::Obj(c),
                            None => fields.push((key, Value::Obj(c))),
                        }
                    }
                    self.charge(fields.len())?;
                    let inst = self.alloc(HeapObj::Object(fields))?;
                    if let Some(c) = ctor {
                        self.probe.hit(site!("eval", "constructor_call"));
                        self.call_closure(&c, env, args)?;
                    }
                    Ok(Value::Obj(inst))
                }
                HeapObj::Closure(def, env) => {
                    self.probe.hit(site!("eval", "new_function"));
                    let (def, env) = (Rc::clone(def), *env);
                    let r = self.call_closure(&def, env, args)?;
                    match r {
                        Value::Obj(_) => Ok(r),
                        _ => Ok(Value::Obj(self.alloc(HeapObj::Object(Vec::new()))?)),
                    }
                }
                _ => Err(RuntimeError::NotConstructor.into()),
            },
            _ => Err(RuntimeError::NotConstructor.into()),
        }
    }

    fn array_ctor(&mut self, args: Vec<Value>) -> R<Value> {
        self.probe.hit(site!("builtin", "array"));
        if let [Value::Num(n)] = args.as_slice() {
            self.probe.hit(site!("builtin", "array_sized"));
            let len = match array_index(*n) {
                Some(l) if l <= self.limits.max_array => l,
                _ => return Err(RuntimeError::BadArrayLength.into()),
            };
            return self.new_array(vec![Value::Undefined; len]);
        }
        self.new_array(args)
    }

    fn array_method(&mut self, m: ArrayMethod, id: ObjId, args: Vec<Value>) -> R<Value> {
        let max = self.limits.max_array;
        let armed = self.arming.armed();
        let HeapObj::Array(a) = &mut self.heap[id as usize] else { unreachable!() };
        let mut grow = 0;
        let r = match m {
            ArrayMethod::Push => {
                self.probe.hit(site!("builtin", "push"));
                if a.items.len() + args.len() > max {
                    return Err(RuntimeError::BadArrayLength.into());
                }
                grow = args.len();
                a.items.extend(args);
                Value::Num(a.items.len() as f64)
            }
            ArrayMethod::Pop => {
                self.probe.hit(site!("builtin", "pop"));
                a.items.pop().unwrap_or(Value::Undefined)
            }
            ArrayMethod::Shift | ArrayMethod::Unshift => {
                let v = if m == ArrayMethod::Shift {
                    self.probe.hit(site!("builtin", "shift"));
                    if a.items.is_empty() {
                        Value::Undefined
                    } else {
                        a.items.remove(0)
                    }
                } else {
                    self.probe.hit(site!("builtin", "unshift"));
                    if a.items.len() + args.len() > max {
                        return Err(RuntimeError::BadArrayLength.into());
                    }
                    grow = args.len();
                    a.items.splice(0..0, args);
                    Value::Num(a.items.len() as f64)
                };
                match a.last_front_op {
                    Some(prev) if prev != m => {
                        a.alternations += 1;
                        self.probe.hit(site!("builtin", "front_alternation"));
                    }
                    _ => a.alternations = 1,
                }
                a.last_front_op = Some(m);
                // free-list consistency check
                if armed && a.alternations >= 8 {
                    return Err(Stop::Assert(Bug::GcShift));
                }
                v
            }
        };
        self.charge(grow)?;
        Ok(r)
    }

    // ---- conversions ----

    pub fn truthy(&self, v: &Value) -> bool {
        match v {
            Value::Undefined | Value::Null => false,
            Value::Bool(b) => *b,
            Value::Num(n) => *n != 0.0 && !n.is_nan(),
            Value::Str(s) => !s.is_empty(),
            _ => true,
        }
    }

    fn to_number(&self, v: &Value) -> f64 {
        match v {
            Value::Undefined => f64::NAN,
            Value::Null => 0.0,
            Value::Bool(b) => *b as u8 as f64,
            Value::Num(n) => *n,
            Value::Str(s) => {
                let t = s.trim();
                if t.is_empty() {
                    0.0
                } else if t.bytes().all(|b| b.is_ascii_digit() || b == b'.' || b == b'-' || b == b'+') {
                    t.parse().unwrap_or(f64::NAN)
                } else {
                    f64::NAN
                }
            }
            _ => f64::NAN,
        }
    }

    fn type_of(&self, v: &Value) -> &'static str {
        match v {
            Value::Undefined => "undefined",
            Value::Null => "object",
            Value::Bool(_) => "boolean",
            Value::Num(_) => "number",
            Value::Str(_) => "string",
            Value::Builtin(_) | Value::Method(..) => "function",
            Value::Obj(id) => match self.heap[*id as usize] {
                HeapObj::Closure(..) | HeapObj::Class(..) => "function",
                _ => "object",
            },
        }
    }

    fn to_string(&mut self, v: &Value) -> R<Value> {
        if let Value::Str(_) = v {
            return Ok(v.clone());
        }
        let mut out = String::new();
        self.write_string(v, &mut out, 0)?;
        self.make_str(out)
    }

    fn write_string(&mut self, v: &Value, out: &mut String, depth: u32) -> R<()> {
        self.tick()?;
        if out.len() > self.limits.max_string {
            return Err(RuntimeError::StringTooLong.into());
        }
        match v {
            Value::Undefined => out.push_str(if depth == 0 { "undefined" } else { "" }),
            Value::Null => out.push_str(if depth == 0 { "null" } else { "" }),
            Value::Bool(b) => out.push_str(if *b { "true" } else { "false" }),
            Value::Num(n) => out.push_str(&number_to_string(*n)),
            Value::Str(s) => out.push_str(s),
            Value::Builtin(_) | Value::Method(..) => out.push_str("function () { [native code] }"),
            Value::Obj(id) => match &self.heap[*id as usize] {
                HeapObj::Array(a) => {
                    if depth >= 4 {
                        return Ok(());
                    }
                    let items = a.items.clone();
                    for (i, item) in items.iter().enumerate() {
                        if i > 0 {
                            out.push(',');
                        }
                        self.write_string(item, out, depth + 1)?;
                    }
                }
                HeapObj::Object(_) => out.push_str("[object Object]"),
                HeapObj::Closure(..) => out.push_str("function"),
                HeapObj::Class(..) => out.push_str("class"),
            },
        }
        Ok(())
    }

    fn binary(&mut self, op: BinOp, a: Value, b: Value) -> R<Value> {
        use BinOp::*;
        Ok(match op {
            Add => {
                let stringy = |v: &Value| {
                    matches!(v, Value::Str(_))
                        || matches!(v, Value::Obj(_) | Value::Builtin(_) | Value::Method(..))
                };
                if stringy(&a) || stringy(&b) {
                    self.probe.hit(site!("binop", "concat"));
                    let Value::Str(x) = self.to_string(&a)? else { unreachable!() };
                    let Value::Str(y) = self.to_string(&b)? else { unreachable!() };
                    let mut s = String::with_capacity(x.len() + y.len());
                    s.push_str(&x);
                    s.push_str(&y);
                    self.make_str(s)?
                } else {
                    self.probe.hit(site!("binop", "add"));
                    Value::Num(self.to_number(&a) + self.to_number(&b))
                }
            }
            Sub => {
                self.probe.hit(site!("binop", "sub"));
                Value::Num(self.to_number(&a) - self.to_number(&b))
            }
            Mul => {
                self.probe.hit(site!("binop", "mul"));
                Value::Num(self.to_number(&a) * self.to_number(&b))
            }
            Div => {
                self.probe.hit(site!("binop", "div"));
                let d = self.to_number(&b);
                if d == 0.0 {
                    self.probe.hit(site!("binop", "div_zero"));
                }
                Value::Num(self.to_number(&a) / d)
            }
            Rem => {
                self.probe.hit(site!("binop", "rem"));
                Value::Num(self.to_number(&a) % self.to_number(&b))
            }
            Lt | Gt | Le | Ge => {
                let ord = match (&a, &b) {
                    (Value::Str(x), Value::Str(y)) => {
                        self.probe.hit(site!("binop", "compare_strings"));
                        Some(x.cmp(y))
                    }
                    _ => {
                        self.probe.hit(site!("binop", "compare_numbers"));
                        self.to_number(&a).partial_cmp(&self.to_number(&b))
                    }
                };
                let r = match ord {
                    None => false,
                    Some(o) => match op {
                        Lt => o.is_lt(),
                        Gt => o.is_gt(),
                        Le => o.is_le(),
                        _ => o.is_ge(),
                    },
                };
                Value::Bool(r)
            }
            Eq | Ne => {
                self.probe.hit(site!("binop", "loose_equality"));
                let r = self.loose_eq(&a, &b);
                Value::Bool(if op == Eq { r } else { !r })
            }
            StrictEq | StrictNe => {
                self.probe.hit(site!("binop", "strict_equality"));
                let r = strict_eq(&a, &b);
                Value::Bool(if op == StrictEq { r } else { !r })
            }
        })
    }

    fn loose_eq(&self, a: &Value, b: &Value) -> bool {
        match (a, b) {
            (Value::Undefined | Value::Null, Value::Undefined | Value::Null) => true,
            (Value::Undefined | Value::Null, _) | (_, Value::Undefined | Value::Null) => false,
            (Value::Str(x), Value::Str(y)) => x == y,
            (Value::Obj(_) | Value::Builtin(_) | Value::Method(..), _)
            | (_, Value::Obj(_) | Value::Builtin(_) | Value::Method(..)) => strict_eq(a, b),
            _ => self.to_number(a) == self.to_number(b),
        }
    }
}

fn strict_eq(a: &Value, b: &Value) -> bool {
    match (a, b) {
        (Value::Undefined, Value::Undefined) | (Value::Null, Value::Null) => true,
        (Value::Bool(x), Value::Bool(y)) => x == y,
        (Value::Num(x), Value::Num(y)) => x == y,
        (Value::Str(x), Value::Str(y)) => x == y,
        (Value::Obj(x), Value::Obj(y)) => x == y,
        (Value::Builtin(x), Value::Builtin(y)) => x == y,
        (Value::Method(m, x), Value::Method(n, y)) => m == n && x == y,
        _ => false,
    }
}
