//! With planted assertions disarmed nothing may crash, and every input,
//! however malformed or large, ends with a status.

use std::time::{Duration, Instant};

use minijs::{execute, Options, Outcome};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use tlfuzz_core::codec::{decode, encode};
use tlfuzz_core::executor::ExecStatus;
use tlfuzz_core::mutator::{MutationBudget, TokenMutator};
use tlfuzz_core::preproc::{build_token_map, prepare_seed};

const SAMPLES: [&str; 5] = [
    "function f ( a , b ) { let c = a + b ; return c ; } let o = { k : f ( 1 , 2 ) , s : 'x' } ; print ( o . k ) ;",
    "let a = [ 1 , 2 , 3 ] ; for ( let i = 0 ; i < 2 ; i ++ ) { a . unshift ( i ) ; a . shift ( ) ; } print ( a . length ) ;",
    "class C { constructor ( x ) { print ( x ) ; } m ( y ) { return y * 2 ; } } let c = new C ( 4 ) ; print ( c . m ( 3 ) ) ;",
    "let s = '' ; let n = 0 ; while ( n < 10 ) { s = s + n ; n ++ ; } if ( s . length > 3 ) { print ( s [ 2 ] ) ; } else { print ( null ) ; }",
    "var g = x => x + 1 ; const h = function ( p ) { var q = p ; return typeof q ; } ; print ( g ( 1 ) , h ( 'a' ) , delete g . z ) ;",
];

fn disarmed() -> Options {
    Options {
        disarm: true,
        ..Options::default()
    }
}

#[test]
fn disarmed_token_havoc_never_crashes() {
    let seeds: Vec<_> = SAMPLES
        .iter()
        .enumerate()
        .map(|(i, s)| prepare_seed("s", s, 1, i).unwrap().tokens)
        .collect();
    let map = build_token_map(&seeds, &[]).unwrap();
    let corpus: Vec<Vec<u16>> = seeds.iter().map(|s| encode(s, &map).unwrap().codes).collect();
    let m = TokenMutator::new(&map, MutationBudget::default());
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut trace = vec![0u8; 1 << 16];
    let mut seen = [0usize; 5];
    for i in 0..20_000 {
        let mut codes = corpus[i % corpus.len()].clone();
        m.havoc(&mut codes, &corpus, &mut rng);
        let text = decode(&tlfuzz_core::EncodedInput::new(codes), &map);
        trace.fill(0);
        let run = execute(text.as_bytes(), Some(&mut trace), &disarmed());
        let status = run.outcome.status();
        assert_ne!(status, ExecStatus::Crash, "{text}");
        seen[status.code() as usize] += 1;
    }
    // the mutants exercise more than the parser
    assert!(seen[ExecStatus::ParseOk.code() as usize] > 30, "{seen:?}");
    assert!(seen[ExecStatus::RuntimeError.code() as usize] > 30, "{seen:?}");
}

proptest! {
    #[test]
    fn random_bytes_get_a_status(bytes in proptest::collection::vec(any::<u8>(), 0..400)) {
        let run = execute(&bytes, None, &disarmed());
        prop_assert_ne!(run.outcome.status(), ExecStatus::Crash);
    }

    #[test]
    fn random_token_soup_gets_a_status(picks in proptest::collection::vec(0usize..40, 0..300)) {
        const WORDS: [&str; 40] = [
            "let", "const", "var", "function", "return", "if", "else", "while", "for", "new",
            "class", "delete", "typeof", "true", "null", "a", "b", "f", "print", "Array",
            "(", ")", "{", "}", "[", "]", ";", ",", ".", ":", "=", "=>", "+", "-", "++",
            "<", "===", "!", "1", "'s'",
        ];
        let text: Vec<&str> = picks.iter().map(|&i| WORDS[i]).collect();
        let run = execute(text.join(" ").as_bytes(), None, &disarmed());
        prop_assert_ne!(run.outcome.status(), ExecStatus::Crash);
    }
}

fn timed(src: &[u8]) -> (Outcome, Duration) {
    let start = Instant::now();
    let run = execute(src, None, &Options::default());
    (run.outcome, start.elapsed())
}

#[test]
fn megabyte_inputs_terminate() {
    const MB: usize = 1 << 20;
    let shapes: [&str; 10] = ["(", "[", "{ a : ", "- ", "a . ", "f ( ) ", "1 + ", "1 ; ", "if ( 1 ) ", "'"];
    for shape in shapes {
        let src: Vec<u8> = shape.bytes().cycle().take(MB).collect();
        let (outcome, took) = timed(&src);
        assert_ne!(outcome.status(), ExecStatus::Crash, "{shape}");
        assert!(took < Duration::from_secs(10), "{shape}: {took:?}");
    }
}

#[test]
fn deep_programs_fit_a_small_stack() {
    let nested_calls = {
        let mut s = String::from("function f ( n ) { if ( n < 1 ) return 0 ; return 1 + f ( n - 1 ) ; } f ( 1000 ) ;");
        s.push_str(&format!(" let x = {} 1 {} ;", "( ".repeat(60), ") ".repeat(60)));
        s
    };
    let nested_blocks = "if ( 1 ) { ".repeat(60) + &"} ".repeat(60);
    let nested_arrays = format!("let a = {} 1 {} ; print ( a ) ;", "[ ".repeat(60), "] ".repeat(60));
    let deep_body = format!(
        "function g ( n ) {{ if ( n < 1 ) return {}1{} ; return g ( n - 1 ) ; }} g ( 100 ) ;",
        "- ( ".repeat(40),
        " )".repeat(40)
    );
    let programs = [nested_calls, nested_blocks, nested_arrays, deep_body];
    let handle = std::thread::Builder::new()
        .stack_size(1 << 20)
        .spawn(move || {
            programs
                .iter()
                .map(|p| execute(p.as_bytes(), None, &Options::default()).outcome.status())
                .collect::<Vec<_>>()
        })
        .unwrap();
    let statuses = handle.join().expect("no stack overflow");
    assert!(statuses.iter().all(|&s| s != ExecStatus::Crash), "{statuses:?}");
}
