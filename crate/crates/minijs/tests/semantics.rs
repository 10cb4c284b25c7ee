use minijs::{execute, Bug, Limits, Options, Outcome, RuntimeError};

fn run(src: &str) -> minijs::Run {
    execute(src.as_bytes(), None, &Options::default())
}

fn output(src: &str) -> String {
    let r = run(src);
    assert_eq!(r.outcome, Outcome::Clean, "{src}");
    String::from_utf8(r.output).unwrap()
}

fn outcome(src: &str) -> Outcome {
    run(src).outcome
}

fn armed() -> bool {
    minijs::Arming::new(false).armed()
}

#[test]
fn basic_statuses() {
    assert_eq!(outcome("let var1 = 1 ;"), Outcome::Clean);
    assert!(matches!(outcome("while while"), Outcome::ParseError(_)));
    assert_eq!(
        outcome("while ( 1 ) { }"),
        Outcome::RuntimeError(RuntimeError::StepLimit)
    );
    assert_eq!(outcome("print ( nope ) ;"), Outcome::RuntimeError(RuntimeError::UndefinedVariable));
}

#[test]
fn arithmetic_and_strings() {
    assert_eq!(output("print ( 1 + 2 * 3 , 7 % 4 , 1 / 0 , - 1 ) ;"), "7 3 Infinity -1\n");
    assert_eq!(output("print ( 'a' + 1 + 2 , 1 + 2 + 'a' ) ;"), "a12 3a\n");
    assert_eq!(output("print ( 'abc' . length , 'abc' [ 1 ] ) ;"), "3 b\n");
    assert_eq!(output("print ( 2 < 10 , '2' < '10' , 1 == '1' , 1 === '1' ) ;"), "true false true false\n");
    assert_eq!(output("print ( null == 0 , null == null , 0 || 3 ) ;"), "false true 3\n");
}

#[test]
fn typeof_and_delete() {
    assert_eq!(
        output("print ( typeof 1 , typeof 'x' , typeof null , typeof print , typeof nothing , typeof [ ] ) ;"),
        "number string object function undefined object\n"
    );
    assert_eq!(output("let o = { a : 1 , b : 2 } ; delete o . a ; print ( o . a , o . b ) ;"), "undefined 2\n");
}

#[test]
fn scopes_and_closures() {
    let src = "
        let make = function ( n ) { let c = n ; return x => c + x ; } ;
        let f = make ( 10 ) ;
        print ( f ( 5 ) ) ;
        let x = 1 ;
        if ( x ) { let x = 2 ; print ( x ) ; }
        print ( x ) ;
        function fib ( n ) { if ( n < 2 ) return n ; return fib ( n - 1 ) + fib ( n - 2 ) ; }
        print ( fib ( 15 ) ) ;
    ";
    assert_eq!(output(src), "15\n2\n1\n610\n");
    assert_eq!(outcome("let a = 1 ; let a = 2 ;"), Outcome::RuntimeError(RuntimeError::Redeclaration));
    assert_eq!(outcome("var a = 1 ; var a = 2 ;"), Outcome::Clean);
    assert_eq!(outcome("const a = 1 ; a = 2 ;"), Outcome::RuntimeError(RuntimeError::ConstAssignment));
}

#[test]
fn loops() {
    assert_eq!(output("let s = 0 ; for ( let i = 0 ; i < 5 ; i ++ ) { s = s + i ; } print ( s ) ;"), "10\n");
    assert_eq!(output("let i = 3 ; while ( i ) i -- ; print ( i ) ;"), "0\n");
    assert_eq!(output("let i = 0 ; print ( i ++ , ++ i , i ) ;"), "0 2 2\n");
}

#[test]
fn arrays() {
    let src = "
        let a = [ 1 , 2 ] ;
        a . push ( 3 ) ;
        a . unshift ( 0 ) ;
        print ( a , a . length , a . shift ( ) , a . pop ( ) , a ) ;
        let b = Array ( 3 ) ;
        b [ 5 ] = 1 ;
        print ( b . length ) ;
        a . length = 0 ;
        print ( a . length , a [ 0 ] ) ;
    ";
    assert_eq!(output(src), "1,2 4 0 3 1,2\n6\n0 undefined\n");
    assert_eq!(outcome("Array ( - 1 ) ;"), Outcome::RuntimeError(RuntimeError::BadArrayLength));
}

#[test]
fn objects_and_classes() {
    let src = "
        class Point { constructor ( x ) { print ( 'made' , x ) ; } norm ( v ) { return v * v ; } }
        let p = new Point ( 3 ) ;
        print ( p . norm ( 4 ) ) ;
        let o = { k : 1 , 'two' : 2 , 3 : 'three' } ;
        o . k = o . k + 1 ;
        o [ 'z' ] = 9 ;
        print ( o . k , o . two , o [ 3 ] , o . z , o . missing ) ;
        print ( String ( 12 ) + String ( [ 1 , [ 2 , 3 ] ] ) ) ;
    ";
    assert_eq!(output(src), "made 3\n16\n2 2 three 9 undefined\n121,2,3\n");
    assert_eq!(outcome("class C { } C ( ) ;"), Outcome::RuntimeError(RuntimeError::ClassCall));
    assert_eq!(outcome("let a = 1 ; a ( ) ;"), Outcome::RuntimeError(RuntimeError::NotCallable));
    assert_eq!(outcome("null . x ;"), Outcome::RuntimeError(RuntimeError::NullProperty));
    assert_eq!(outcome("new 1 ;").status(), tlfuzz_core::executor::ExecStatus::ParseError);
}

#[test]
fn limits_are_runtime_errors() {
    assert_eq!(
        outcome("function f ( ) { return f ( ) ; } f ( ) ;"),
        Outcome::RuntimeError(RuntimeError::StackOverflow)
    );
    assert_eq!(
        outcome("let s = 'ab' ; while ( 1 ) { s = s + s ; }"),
        Outcome::RuntimeError(RuntimeError::StringTooLong)
    );
    assert_eq!(
        outcome("let a = [ ] ; while ( 1 ) { a . push ( Array ( 65536 ) ) ; }"),
        Outcome::RuntimeError(RuntimeError::OutOfMemory)
    );
    let tight = Options {
        limits: Limits { steps: 10, ..Limits::default() },
        ..Options::default()
    };
    let r = execute(b"let a = 1 ; a = a + 1 ; a = a + 1 ; a = a + 1 ;", None, &tight);
    assert_eq!(r.outcome, Outcome::RuntimeError(RuntimeError::StepLimit));
}

fn witness(bug: Bug) -> &'static str {
    match bug {
        Bug::SyntaxAssign => "{ var1 = 5 } ;",
        Bug::ConstRedef => "function f ( a ) { const a = 1 ; } f ( 2 ) ;",
        Bug::TrailingExpr => "let f = function ( a ) { return a ; } ; f ( 1 ) 1 ;",
        Bug::GcShift => {
            "let a = [ 1 , 2 , 3 ] ; for ( let i = 0 ; i < 4 ; i ++ ) { a . shift ( ) ; a . unshift ( i ) ; }"
        }
    }
}

#[test]
fn every_bug_has_a_witness() {
    if !armed() {
        return;
    }
    for bug in Bug::ALL {
        assert_eq!(outcome(witness(bug)), Outcome::Assertion(bug), "{bug:?}");
        assert_eq!(outcome(witness(bug)).assertion_id(), Some(bug.id()));
    }
}

#[test]
fn near_misses_do_not_fire() {
    // index inside the argument list
    assert_eq!(outcome("let f = function ( a , b ) { } ; f ( 1 , 2 ) 1 ;"), Outcome::Clean);
    // seven alternations
    assert_eq!(
        outcome("let a = [ ] ; a . shift ( ) ; for ( let i = 0 ; i < 3 ; i ++ ) { a . unshift ( i ) ; a . shift ( ) ; }"),
        Outcome::Clean
    );
    // same-direction runs reset the counter
    assert_eq!(
        outcome("let a = [ ] ; for ( let i = 0 ; i < 20 ; i ++ ) { a . unshift ( i ) ; a . unshift ( i ) ; a . shift ( ) ; }"),
        Outcome::Clean
    );
    // const shadowing in a nested block is a fresh scope
    assert_eq!(outcome("function f ( a ) { if ( a ) { const a = 1 ; } } f ( 2 ) ;"), Outcome::Clean);
    // outside a function it is an ordinary redeclaration error
    assert_eq!(
        outcome("let a = 1 ; const a = 2 ;"),
        Outcome::RuntimeError(RuntimeError::Redeclaration)
    );
}

#[test]
fn disarmed_runs_are_safe() {
    let opts = Options {
        disarm: true,
        ..Options::default()
    };
    for bug in Bug::ALL {
        let r = execute(witness(bug).as_bytes(), None, &opts);
        assert_ne!(r.outcome.status(), tlfuzz_core::executor::ExecStatus::Crash, "{bug:?}");
    }
}

#[test]
fn identical_text_identical_trace() {
    let src = b"let a = [ 1 ] ; function g ( x ) { return x + 1 ; } for ( let i = 0 ; i < 9 ; i ++ ) { a . push ( g ( i ) ) ; } print ( a ) ;";
    let mut t1 = vec![0u8; 1 << 16];
    let mut t2 = vec![0u8; 1 << 16];
    let r1 = execute(src, Some(&mut t1), &Options::default());
    let r2 = execute(src, Some(&mut t2), &Options::default());
    assert_eq!(r1.outcome, r2.outcome);
    assert_eq!(r1.output, r2.output);
    assert_eq!(t1, t2);
    assert!(t1.iter().filter(|&&c| c > 0).count() > 20);
}

#[test]
fn list_bugs_names_all_four() {
    let text = minijs::list_bugs();
    assert_eq!(text.lines().count(), 4);
    for b in Bug::ALL {
        assert!(text.contains(b.name()));
    }
}
