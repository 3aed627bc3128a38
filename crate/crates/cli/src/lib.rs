//! Command-line front end for `weightmult`.
//!
//! ```text
//! weightmult mult A4 [1,1,0,1] 'L - a1 - a2 - a3 - a4'
//! weightmult char G2 [1,1] --format machine
//! ```

mod query;
mod run;

pub use query::{
    algorithm_name, parse_query, Command, Format, MuSpec, Options, ParseError, Query, TraceLevel,
};
pub use run::{
    exit_code, run, Output, EXIT_DOMAIN, EXIT_FAILED, EXIT_OK, EXIT_ORACLE_CAP, EXIT_PARSE,
};

pub const USAGE: &str = "\
usage: weightmult COMMAND SYSTEM LAMBDA [MU] [OPTIONS]

commands:
  mult    multiplicity of MU in L(LAMBDA)
  char    dominant character of L(LAMBDA)
  dim     dimension from the character and from Weyl's formula
  verify  compare dispatcher, classical recursion and Kostant's formula
  bench   time MU under the classical and the fast recursion

SYSTEM  A1.. B2.. C3.. D4.. E6-E8 F4 G2 (Bourbaki labeling)
LAMBDA  [a1,...,al] in fundamental weight coordinates
MU      [m1,...,ml] or an expression such as 'L - a1 - 2*a3'

options:
  --format text|machine
  --trace off|summary|full
  --algorithm auto|classical|fast
  --oracle-cap N     largest Weyl group the Kostant oracle enumerates
";

/// Parses and runs one invocation (without the program name).
pub fn main_with<S: AsRef<str>>(args: &[S]) -> Output {
    if args.is_empty()
        || args
            .iter()
            .any(|a| matches!(a.as_ref(), "-h" | "--help" | "help"))
    {
        let code = if args.is_empty() { EXIT_PARSE } else { EXIT_OK };
        return Output {
            code,
            stdout: USAGE.to_string(),
            stderr: String::new(),
        };
    }
    match parse_query(args) {
        Ok(q) => run(&q),
        Err(e) => Output {
            code: EXIT_PARSE,
            stdout: String::new(),
            stderr: format!("parse error: {e}\nrun `weightmult --help` for usage\n"),
        },
    }
}
