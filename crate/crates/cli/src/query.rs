use std::fmt;

use thiserror::Error;
use weightmult::{Algorithm, Family, RootVector, Weight, DEFAULT_CAP};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    Mult,
    Char,
    Dim,
    Verify,
    Bench,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::Mult => "mult",
            Command::Char => "char",
            Command::Dim => "dim",
            Command::Verify => "verify",
            Command::Bench => "bench",
        }
    }

    /// Whether the command takes a weight after the highest weight.
    pub fn takes_weight(self) -> bool {
        matches!(self, Command::Mult | Command::Bench)
    }
}

/// The weight `mu`, either as coordinates or as `lam - sum c_r alpha_r`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MuSpec {
    Explicit(Weight),
    BelowLambda(RootVector),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Text,
    Machine,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum TraceLevel {
    Off,
    #[default]
    Summary,
    Full,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Options {
    pub format: Format,
    pub trace: TraceLevel,
    pub algorithm: Algorithm,
    pub oracle_cap: u64,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            format: Format::Text,
            trace: TraceLevel::Summary,
            algorithm: Algorithm::Auto,
            oracle_cap: DEFAULT_CAP,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Query {
    pub command: Command,
    pub family: Family,
    pub rank: usize,
    pub lam: Weight,
    /// Present exactly for the commands that take a weight.
    pub mu: Option<MuSpec>,
    pub options: Options,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("token {token}, byte {offset}: expected {}, found {found:?}", expected.join(" | "))]
    Unexpected {
        /// Index into the argument list.
        token: usize,
        /// Byte offset inside that argument.
        offset: usize,
        expected: Vec<String>,
        found: String,
    },
    #[error("token {token}: weight has {found} coordinates but the rank is {expected}")]
    RankMismatch {
        token: usize,
        expected: usize,
        found: usize,
    },
}

fn unexpected(token: usize, offset: usize, expected: &[&str], found: &str) -> ParseError {
    ParseError::Unexpected {
        token,
        offset,
        expected: expected.iter().map(|s| s.to_string()).collect(),
        found: found.to_string(),
    }
}

/// Character cursor over one piece of input that remembers where each byte
/// came from in the argument list.
struct Cursor<'a> {
    text: &'a str,
    pos: usize,
    /// `(start byte in text, argument index)` for every joined argument.
    origins: Vec<(usize, usize)>,
}

impl<'a> Cursor<'a> {
    fn new(text: &'a str, origins: Vec<(usize, usize)>) -> Self {
        Cursor {
            text,
            pos: 0,
            origins,
        }
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.peek().filter(|c| c.is_whitespace()) {
            self.pos += c.len_utf8();
        }
    }

    fn peek(&self) -> Option<char> {
        self.text[self.pos..].chars().next()
    }

    fn at_end(&mut self) -> bool {
        self.skip_ws();
        self.pos >= self.text.len()
    }

    fn locate(&self) -> (usize, usize) {
        let &(start, token) = self
            .origins
            .iter()
            .rev()
            .find(|(start, _)| *start <= self.pos)
            .expect("cursor has an origin");
        (token, self.pos - start)
    }

    fn error(&self, expected: &[&str]) -> ParseError {
        let (token, offset) = self.locate();
        let found = match self.peek() {
            Some(c) => c.to_string(),
            None => "end of input".to_string(),
        };
        unexpected(token, offset, expected, &found)
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), ParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(&[&format!("'{c}'")]))
        }
    }

    fn digits(&mut self) -> Option<&'a str> {
        self.skip_ws();
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        (self.pos > start).then(|| &self.text[start..self.pos])
    }

    fn integer(&mut self, signed: bool) -> Result<i64, ParseError> {
        self.skip_ws();
        let start = self.pos;
        let negative = signed && self.eat('-');
        let Some(digits) = self.digits() else {
            self.pos = start;
            self.skip_ws();
            return Err(self.error(&["integer"]));
        };
        let value: i64 = digits.parse().map_err(|_| {
            let mut at = Cursor::new(self.text, self.origins.clone());
            at.pos = start;
            at.error(&["integer that fits in 64 bits"])
        })?;
        Ok(if negative { -value } else { value })
    }
}

fn parse_system(token: usize, s: &str) -> Result<(Family, usize), ParseError> {
    let mut chars = s.chars();
    let family = chars
        .next()
        .filter(char::is_ascii_uppercase)
        .and_then(Family::from_letter)
        .ok_or_else(|| unexpected(token, 0, &["family letter A-G"], s))?;
    let digits = &s[1..];
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(unexpected(token, 1, &["rank"], digits));
    }
    let rank = digits
        .parse()
        .map_err(|_| unexpected(token, 1, &["rank"], digits))?;
    Ok((family, rank))
}

fn parse_weight(token: usize, s: &str, rank: usize) -> Result<Weight, ParseError> {
    let mut cur = Cursor::new(s, vec![(0, token)]);
    cur.expect('[')?;
    let mut coords = Vec::new();
    if !cur.eat(']') {
        loop {
            coords.push(cur.integer(true)?);
            if cur.eat(']') {
                break;
            }
            if !cur.eat(',') {
                return Err(cur.error(&["','", "']'"]));
            }
        }
    }
    if !cur.at_end() {
        return Err(cur.error(&["end of weight"]));
    }
    if coords.len() != rank {
        return Err(ParseError::RankMismatch {
            token,
            expected: rank,
            found: coords.len(),
        });
    }
    Ok(Weight::new(coords))
}

/// `L - c1*a1 - a3 ...` spread over one or more arguments.
fn parse_expression(pieces: &[(usize, &str)], rank: usize) -> Result<RootVector, ParseError> {
    let mut text = String::new();
    let mut origins = Vec::new();
    for (token, piece) in pieces {
        if !text.is_empty() {
            text.push(' ');
        }
        origins.push((text.len(), *token));
        text.push_str(piece);
    }
    let mut cur = Cursor::new(&text, origins);
    if !cur.eat('L') {
        return Err(cur.error(&["'L'", "'['"]));
    }
    let mut coeffs = vec![0i64; rank];
    while !cur.at_end() {
        if !cur.eat('-') {
            return Err(cur.error(&["'-'", "end of expression"]));
        }
        cur.skip_ws();
        let coeff = if cur.peek().is_some_and(|c| c.is_ascii_digit()) {
            let c = cur.integer(false)?;
            cur.expect('*')?;
            c
        } else {
            1
        };
        if !cur.eat('a') {
            return Err(cur.error(&["'a'", "coefficient"]));
        }
        let before = cur.pos;
        let index = cur.integer(false)?;
        if index < 1 || index as usize > rank {
            cur.pos = before;
            cur.skip_ws();
            return Err(cur.error(&[&format!("simple root index 1..={rank}")]));
        }
        coeffs[index as usize - 1] += coeff;
    }
    Ok(RootVector::new(coeffs).expect("coefficients are non-negative"))
}

fn parse_flag_value<T>(
    token: usize,
    flag: &str,
    value: Option<&str>,
    choices: &[(&str, T)],
) -> Result<T, ParseError>
where
    T: Copy,
{
    let names: Vec<&str> = choices.iter().map(|(n, _)| *n).collect();
    let Some(value) = value else {
        return Err(unexpected(token, flag.len(), &names, "end of input"));
    };
    choices
        .iter()
        .find(|(n, _)| *n == value)
        .map(|(_, v)| *v)
        .ok_or_else(|| unexpected(token, 0, &names, value))
}

const COMMANDS: [(&str, Command); 5] = [
    ("mult", Command::Mult),
    ("char", Command::Char),
    ("dim", Command::Dim),
    ("verify", Command::Verify),
    ("bench", Command::Bench),
];

const FLAGS: [&str; 4] = ["--format", "--trace", "--algorithm", "--oracle-cap"];

/// Parses `COMMAND SYSTEM LAMBDA [MU] [FLAGS]`. Flags may appear anywhere,
/// as `--flag value` or `--flag=value`.
pub fn parse_query<S: AsRef<str>>(argv: &[S]) -> Result<Query, ParseError> {
    let mut options = Options::default();
    let mut positional: Vec<(usize, &str)> = Vec::new();
    let mut i = 0;
    while i < argv.len() {
        let arg = argv[i].as_ref();
        if !arg.starts_with("--") {
            positional.push((i, arg));
            i += 1;
            continue;
        }
        let (flag, inline) = match arg.split_once('=') {
            Some((f, v)) => (f, Some(v)),
            None => (arg, None),
        };
        if !FLAGS.contains(&flag) {
            return Err(unexpected(i, 0, &FLAGS, flag));
        }
        let (value_token, value) = match inline {
            Some(v) => (i, Some(v)),
            None => {
                i += 1;
                (i, argv.get(i).map(|s| s.as_ref()))
            }
        };
        match flag {
            "--format" => {
                options.format = parse_flag_value(
                    value_token,
                    flag,
                    value,
                    &[("text", Format::Text), ("machine", Format::Machine)],
                )?
            }
            "--trace" => {
                options.trace = parse_flag_value(
                    value_token,
                    flag,
                    value,
                    &[
                        ("off", TraceLevel::Off),
                        ("summary", TraceLevel::Summary),
                        ("full", TraceLevel::Full),
                    ],
                )?
            }
            "--algorithm" => {
                options.algorithm = parse_flag_value(
                    value_token,
                    flag,
                    value,
                    &[
                        ("auto", Algorithm::Auto),
                        ("classical", Algorithm::Classical),
                        ("fast", Algorithm::Fast),
                    ],
                )?
            }
            "--oracle-cap" => {
                let v = value.ok_or_else(|| {
                    unexpected(value_token, 0, &["positive integer"], "end of input")
                })?;
                options.oracle_cap = v
                    .parse::<u64>()
                    .ok()
                    .filter(|&n| n > 0)
                    .ok_or_else(|| unexpected(value_token, 0, &["positive integer"], v))?;
            }
            _ => unreachable!("flag names checked above"),
        }
        i += 1;
    }

    let end = argv.len();
    let mut pos = positional.into_iter();
    let (t, word) = pos
        .next()
        .ok_or_else(|| unexpected(end, 0, &["command"], "end of input"))?;
    let command = COMMANDS
        .iter()
        .find(|(n, _)| *n == word)
        .map(|(_, c)| *c)
        .ok_or_else(|| {
            let names: Vec<&str> = COMMANDS.iter().map(|(n, _)| *n).collect();
            unexpected(t, 0, &names, word)
        })?;
    let (t, word) = pos
        .next()
        .ok_or_else(|| unexpected(end, 0, &["root system such as A4"], "end of input"))?;
    let (family, rank) = parse_system(t, word)?;
    let (t, word) = pos
        .next()
        .ok_or_else(|| unexpected(end, 0, &["highest weight [a1,...,al]"], "end of input"))?;
    let lam = parse_weight(t, word, rank)?;

    let rest: Vec<(usize, &str)> = pos.collect();
    let mu = if command.takes_weight() {
        let Some(&(t, first)) = rest.first() else {
            return Err(unexpected(
                end,
                0,
                &["weight [..] or expression L - ..."],
                "end of input",
            ));
        };
        if first.trim_start().starts_with('[') {
            if let Some(&(t2, extra)) = rest.get(1) {
                return Err(unexpected(t2, 0, &["flag", "end of input"], extra));
            }
            Some(MuSpec::Explicit(parse_weight(t, first, rank)?))
        } else {
            Some(MuSpec::BelowLambda(parse_expression(&rest, rank)?))
        }
    } else {
        if let Some(&(t, extra)) = rest.first() {
            return Err(unexpected(t, 0, &["flag", "end of input"], extra));
        }
        None
    };
    Ok(Query {
        command,
        family,
        rank,
        lam,
        mu,
        options,
    })
}

fn render_weight(w: &Weight) -> String {
    w.to_string()
}

impl fmt::Display for MuSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MuSpec::Explicit(w) => write!(f, "{}", render_weight(w)),
            MuSpec::BelowLambda(c) => {
                write!(f, "L")?;
                for (i, &k) in c.coeffs().iter().enumerate() {
                    match k {
                        0 => {}
                        1 => write!(f, "-a{}", i + 1)?,
                        _ => write!(f, "-{k}*a{}", i + 1)?,
                    }
                }
                Ok(())
            }
        }
    }
}

impl Query {
    /// Argument list that parses back to this query.
    pub fn render(&self) -> Vec<String> {
        let mut out = vec![
            self.command.name().to_string(),
            format!("{}{}", self.family, self.rank),
            render_weight(&self.lam),
        ];
        if let Some(mu) = &self.mu {
            out.push(mu.to_string());
        }
        let o = &self.options;
        let format = match o.format {
            Format::Text => "text",
            Format::Machine => "machine",
        };
        let trace = match o.trace {
            TraceLevel::Off => "off",
            TraceLevel::Summary => "summary",
            TraceLevel::Full => "full",
        };
        out.extend([
            format!("--format={format}"),
            format!("--trace={trace}"),
            format!("--algorithm={}", algorithm_name(o.algorithm)),
            format!("--oracle-cap={}", o.oracle_cap),
        ]);
        out
    }
}

pub fn algorithm_name(a: Algorithm) -> &'static str {
    match a {
        Algorithm::Auto => "auto",
        Algorithm::Classical => "classical",
        Algorithm::Fast => "fast",
    }
}
