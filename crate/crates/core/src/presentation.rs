//! Words in a free group, group presentations with a degree map to the
//! procyclic group, the text format for presentations, and the
//! total-degree-zero check.

use std::fmt;

use crate::error::{Error, ParseError, ParseErrorKind, Result};

/// Upper bound on the number of syllables a single word may expand to.
pub const MAX_SYLLABLES: usize = 1 << 20;

/// A freely reduced word: adjacent syllables have distinct generators and
/// no exponent is zero.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Word {
    syllables: Vec<(usize, i64)>,
}

impl Word {
    pub fn identity() -> Self {
        Word::default()
    }

    pub fn generator(i: usize) -> Self {
        Word { syllables: vec![(i, 1)] }
    }

    pub fn power_of(i: usize, n: i64) -> Self {
        if n == 0 {
            Word::identity()
        } else {
            Word { syllables: vec![(i, n)] }
        }
    }

    /// Freely reduces an arbitrary syllable sequence.
    pub fn from_syllables(raw: impl IntoIterator<Item = (usize, i64)>) -> Result<Self> {
        let mut out: Vec<(usize, i64)> = Vec::new();
        for (g, e) in raw {
            push_syllable(&mut out, g, e)?;
        }
        Ok(Word { syllables: out })
    }

    pub fn syllables(&self) -> &[(usize, i64)] {
        &self.syllables
    }

    pub fn is_identity(&self) -> bool {
        self.syllables.is_empty()
    }

    /// Largest generator index used, if any.
    pub fn max_generator(&self) -> Option<usize> {
        self.syllables.iter().map(|&(g, _)| g).max()
    }

    pub fn try_mul(&self, other: &Word) -> Result<Word> {
        if self.syllables.len() + other.syllables.len() > MAX_SYLLABLES {
            return Err(Error::TooLarge("word exceeds the syllable limit".into()));
        }
        let mut out = self.syllables.clone();
        for &(g, e) in &other.syllables {
            push_syllable(&mut out, g, e)?;
        }
        Ok(Word { syllables: out })
    }

    /// Product of reduced words. Panics if an exponent overflows `i64`;
    /// use [`Word::try_mul`] for untrusted input.
    pub fn mul(&self, other: &Word) -> Word {
        self.try_mul(other).expect("word product overflow")
    }

    pub fn try_inv(&self) -> Result<Word> {
        let syllables = self
            .syllables
            .iter()
            .rev()
            .map(|&(g, e)| e.checked_neg().map(|n| (g, n)))
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| Error::Overflow("exponent negation".into()))?;
        Ok(Word { syllables })
    }

    pub fn inv(&self) -> Word {
        self.try_inv().expect("word inverse overflow")
    }

    /// `self^n`. A conjugated power `u·c·u⁻¹` is raised as `u·cⁿ·u⁻¹`, so a
    /// single-syllable core costs nothing regardless of `n`.
    pub fn try_pow(&self, n: i64) -> Result<Word> {
        if n == 0 || self.is_identity() {
            return Ok(Word::identity());
        }
        let base = if n < 0 { self.try_inv()? } else { self.clone() };
        let n = n.unsigned_abs();
        let s = &base.syllables;
        let mut k = 0;
        while k < s.len() - 1 - k && s[k].0 == s[s.len() - 1 - k].0 && s[k].1 == -s[s.len() - 1 - k].1 {
            k += 1;
        }
        let outer = Word { syllables: s[..k].to_vec() };
        let core = &s[k..s.len() - k];
        let powered = if core.len() == 1 {
            let e = i64::try_from(n)
                .ok()
                .and_then(|n| core[0].1.checked_mul(n))
                .ok_or_else(|| Error::Overflow("exponent of a power".into()))?;
            Word { syllables: vec![(core[0].0, e)] }
        } else {
            let total = (core.len() as u128) * u128::from(n);
            if total > MAX_SYLLABLES as u128 {
                return Err(Error::TooLarge(format!("power with {total} syllables")));
            }
            let mut out = Vec::with_capacity(total as usize);
            for _ in 0..n {
                for &(g, e) in core {
                    push_syllable(&mut out, g, e)?;
                }
            }
            Word { syllables: out }
        };
        outer.try_mul(&powered)?.try_mul(&outer.try_inv()?)
    }

    pub fn pow(&self, n: i64) -> Word {
        self.try_pow(n).expect("word power overflow")
    }

    /// `[x, y] = x⁻¹y⁻¹xy`.
    pub fn commutator(x: &Word, y: &Word) -> Result<Word> {
        x.try_inv()?.try_mul(&y.try_inv()?)?.try_mul(x)?.try_mul(y)
    }

    /// Σ e_i · exponent over syllables, where `e_i = alpha[i]`.
    pub fn total_degree(&self, alpha: &[i64]) -> i128 {
        self.syllables
            .iter()
            .map(|&(g, e)| i128::from(alpha[g]) * i128::from(e))
            .sum()
    }

    /// Text form using the given generator names; the identity prints as `1`.
    pub fn display<'a>(&'a self, names: &'a [String]) -> impl fmt::Display + 'a {
        WordDisplay { word: self, names }
    }
}

fn push_syllable(out: &mut Vec<(usize, i64)>, g: usize, e: i64) -> Result<()> {
    if e == 0 {
        return Ok(());
    }
    match out.last_mut() {
        Some(last) if last.0 == g => {
            let sum = last
                .1
                .checked_add(e)
                .ok_or_else(|| Error::Overflow("exponent sum".into()))?;
            if sum == 0 {
                out.pop();
            } else {
                last.1 = sum;
            }
        }
        _ => out.push((g, e)),
    }
    Ok(())
}

struct WordDisplay<'a> {
    word: &'a Word,
    names: &'a [String],
}

impl fmt::Display for WordDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.is_identity() {
            return write!(f, "1");
        }
        for (k, &(g, e)) in self.word.syllables.iter().enumerate() {
            if k > 0 {
                write!(f, "*")?;
            }
            write!(f, "{}", self.names[g])?;
            if e != 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// `left = right`; a single-word relator has `right` equal to the identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relator {
    pub left: Word,
    pub right: Word,
}

impl Relator {
    pub fn single(w: Word) -> Self {
        Relator { left: w, right: Word::identity() }
    }

    pub fn equation(left: Word, right: Word) -> Self {
        Relator { left, right }
    }

    /// The relator as a word, `left·right⁻¹`.
    pub fn word(&self) -> Result<Word> {
        self.left.try_mul(&self.right.try_inv()?)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    pub prime: u64,
    pub generators: Vec<String>,
    pub relators: Vec<Relator>,
    pub alpha: Vec<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidationReport {
    /// Total degree of `left·right⁻¹` for each relator, in file order.
    pub degrees: Vec<i128>,
    pub alpha_ok: bool,
    pub failures: Vec<String>,
}

impl ValidationReport {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }
}

impl Presentation {
    pub fn new(prime: u64, generators: Vec<String>, relators: Vec<Relator>) -> Self {
        let n = generators.len();
        Presentation { prime, generators, relators, alpha: vec![1; n] }
    }

    pub fn num_generators(&self) -> usize {
        self.generators.len()
    }

    pub fn num_relators(&self) -> usize {
        self.relators.len()
    }

    pub fn generator_index(&self, name: &str) -> Option<usize> {
        self.generators.iter().position(|g| g == name)
    }

    /// Parses a single word over this presentation's generators.
    pub fn parse_word(&self, text: &str) -> Result<Word> {
        let chars: Vec<char> = text.chars().collect();
        let mut p = WordParser { chars: &chars, pos: 0, line: 1, col0: 1, names: &self.generators };
        let w = p.word()?;
        p.skip_ws();
        if p.pos < chars.len() {
            return Err(p.err("unexpected trailing input").into());
        }
        Ok(w)
    }

    pub fn relator_words(&self) -> Result<Vec<Word>> {
        self.relators.iter().map(Relator::word).collect()
    }

    pub fn validate(&self) -> Result<ValidationReport> {
        let mut failures = Vec::new();
        let mut degrees = Vec::with_capacity(self.relators.len());
        for (j, r) in self.relators.iter().enumerate() {
            let d = r.word()?.total_degree(&self.alpha);
            if d != 0 {
                failures.push(format!("relator {} has total degree {d}", j + 1));
            }
            degrees.push(d);
        }
        let mut alpha_ok = true;
        for (i, &e) in self.alpha.iter().enumerate() {
            if e != 1 {
                alpha_ok = false;
                failures.push(format!(
                    "alpha not constant-γ: generator {} has exponent {e}",
                    self.generators[i]
                ));
            }
        }
        Ok(ValidationReport { degrees, alpha_ok, failures })
    }

    /// Fails with `HypothesisViolated` unless every relator has total degree
    /// zero and every generator maps to γ.
    pub fn require_valid(&self) -> Result<()> {
        let report = self.validate()?;
        if report.ok() {
            Ok(())
        } else {
            Err(Error::HypothesisViolated(report.failures.join("; ")))
        }
    }

    pub fn parse(text: &str) -> std::result::Result<Self, ParseError> {
        parse_presentation(text)
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "prime {}", self.prime)?;
        writeln!(f, "generators {}", self.generators.join(" "))?;
        if self.alpha.iter().any(|&e| e != 1) {
            write!(f, "alpha")?;
            for (g, e) in self.generators.iter().zip(&self.alpha) {
                write!(f, " {g}={e}")?;
            }
            writeln!(f)?;
        }
        for r in &self.relators {
            write!(f, "relator {}", r.left.display(&self.generators))?;
            if !r.right.is_identity() {
                write!(f, " = {}", r.right.display(&self.generators))?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn is_ident_start(c: char) -> bool {
    c.is_alphabetic() || c == '_'
}

fn is_ident_char(c: char) -> bool {
    c.is_alphanumeric() || c == '_'
}

struct WordParser<'a> {
    chars: &'a [char],
    pos: usize,
    line: usize,
    col0: usize,
    names: &'a [String],
}

impl WordParser<'_> {
    fn col(&self) -> usize {
        self.col0 + self.pos
    }

    fn err(&self, msg: &str) -> ParseError {
        ParseError::syntax(self.line, self.col(), msg)
    }

    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn expect(&mut self, c: char) -> std::result::Result<(), ParseError> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.err(&format!("expected `{c}`")))
        }
    }

    fn lift(&self, col: usize, e: Error) -> ParseError {
        ParseError::syntax(self.line, col, e.to_string())
    }

    fn word(&mut self) -> std::result::Result<Word, ParseError> {
        let start = self.col();
        let mut w = self.term()?;
        while self.peek() == Some('*') {
            self.pos += 1;
            let t = self.term()?;
            w = w.try_mul(&t).map_err(|e| self.lift(start, e))?;
        }
        Ok(w)
    }

    fn term(&mut self) -> std::result::Result<Word, ParseError> {
        let start = self.peek().map(|_| self.col()).unwrap_or(self.col());
        let atom = self.atom()?;
        if self.peek() == Some('^') {
            self.pos += 1;
            let n = self.int()?;
            return atom.try_pow(n).map_err(|e| self.lift(start, e));
        }
        Ok(atom)
    }

    fn atom(&mut self) -> std::result::Result<Word, ParseError> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let w = self.word()?;
                self.expect(')')?;
                Ok(w)
            }
            Some('[') => {
                let start = self.col();
                self.pos += 1;
                let x = self.word()?;
                self.expect(',')?;
                let y = self.word()?;
                self.expect(']')?;
                Word::commutator(&x, &y).map_err(|e| self.lift(start, e))
            }
            Some('1') => {
                let start = self.pos;
                self.pos += 1;
                if self.chars.get(self.pos).is_some_and(|&c| is_ident_char(c)) {
                    self.pos = start;
                    return Err(self.err("expected a generator, `1`, `(` or `[`"));
                }
                Ok(Word::identity())
            }
            Some(c) if is_ident_start(c) => {
                let start = self.pos;
                while self.pos < self.chars.len() && is_ident_char(self.chars[self.pos]) {
                    self.pos += 1;
                }
                let name: String = self.chars[start..self.pos].iter().collect();
                match self.names.iter().position(|g| *g == name) {
                    Some(i) => Ok(Word::generator(i)),
                    None => Err(ParseError {
                        line: self.line,
                        col: self.col0 + start,
                        kind: ParseErrorKind::UnknownGenerator(name),
                    }),
                }
            }
            _ => Err(self.err("expected a generator, `1`, `(` or `[`")),
        }
    }

    fn int(&mut self) -> std::result::Result<i64, ParseError> {
        self.skip_ws();
        let start = self.pos;
        if self.chars.get(self.pos) == Some(&'-') {
            self.pos += 1;
        }
        let digits = self.pos;
        while self.pos < self.chars.len() && self.chars[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == digits {
            return Err(self.err("expected an integer exponent"));
        }
        let text: String = self.chars[start..self.pos].iter().collect();
        let n: i64 = text.parse().map_err(|_| {
            ParseError::syntax(self.line, self.col0 + start, "exponent out of range")
        })?;
        if n == 0 {
            return Err(ParseError {
                line: self.line,
                col: self.col0 + start,
                kind: ParseErrorKind::ZeroExponent,
            });
        }
        Ok(n)
    }
}

/// Parses the line-oriented presentation format.
pub fn parse_presentation(text: &str) -> std::result::Result<Presentation, ParseError> {
    let mut prime: Option<u64> = None;
    let mut generators: Option<Vec<String>> = None;
    let mut alpha: Vec<i64> = Vec::new();
    let mut relators = Vec::new();
    let mut last_line = 0;

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        last_line = line;
        let content = raw.split('#').next().unwrap_or("");
        let chars: Vec<char> = content.chars().collect();
        let mut pos = 0;
        while pos < chars.len() && chars[pos].is_whitespace() {
            pos += 1;
        }
        if pos == chars.len() {
            continue;
        }
        let kw_start = pos;
        while pos < chars.len() && !chars[pos].is_whitespace() {
            pos += 1;
        }
        let keyword: String = chars[kw_start..pos].iter().collect();
        let rest_col = pos + 1;
        let rest: String = chars[pos..].iter().collect();
        let tokens = tokens_with_cols(&chars, pos);
        match keyword.as_str() {
            "prime" => {
                if prime.is_some() {
                    return Err(ParseError::syntax(line, kw_start + 1, "duplicate `prime` directive"));
                }
                let [(tok, col)] = tokens.as_slice() else {
                    return Err(ParseError::syntax(line, rest_col, "expected one integer after `prime`"));
                };
                let p: u64 = tok
                    .parse()
                    .map_err(|_| ParseError::syntax(line, *col, "expected a prime number"))?;
                if !is_prime(p) {
                    return Err(ParseError::syntax(line, *col, format!("{p} is not prime")));
                }
                prime = Some(p);
            }
            "generators" => {
                if generators.is_some() {
                    return Err(ParseError::syntax(line, kw_start + 1, "duplicate `generators` directive"));
                }
                if tokens.is_empty() {
                    return Err(ParseError::syntax(line, rest_col, "expected generator names"));
                }
                let mut names: Vec<String> = Vec::new();
                for (tok, col) in &tokens {
                    let valid = tok.chars().next().is_some_and(is_ident_start)
                        && tok.chars().all(is_ident_char);
                    if !valid {
                        return Err(ParseError::syntax(line, *col, format!("invalid generator name `{tok}`")));
                    }
                    if names.contains(tok) {
                        return Err(ParseError {
                            line,
                            col: *col,
                            kind: ParseErrorKind::DuplicateGenerator(tok.clone()),
                        });
                    }
                    names.push(tok.clone());
                }
                alpha = vec![1; names.len()];
                generators = Some(names);
            }
            "alpha" => {
                let Some(names) = &generators else {
                    return Err(ParseError::syntax(line, kw_start + 1, "`alpha` before `generators`"));
                };
                for (tok, col) in &tokens {
                    let Some((name, value)) = tok.split_once('=') else {
                        return Err(ParseError::syntax(line, *col, "expected `name=integer`"));
                    };
                    let Some(i) = names.iter().position(|g| g == name) else {
                        return Err(ParseError {
                            line,
                            col: *col,
                            kind: ParseErrorKind::UnknownGenerator(name.to_string()),
                        });
                    };
                    alpha[i] = value.parse().map_err(|_| {
                        ParseError::syntax(line, col + name.chars().count() + 1, "expected an integer")
                    })?;
                }
            }
            "relator" => {
                let Some(names) = &generators else {
                    return Err(ParseError::syntax(line, kw_start + 1, "`relator` before `generators`"));
                };
                let rchars: Vec<char> = rest.chars().collect();
                let mut p = WordParser { chars: &rchars, pos: 0, line, col0: rest_col, names };
                if p.peek().is_none() {
                    return Err(p.err("expected a word"));
                }
                let left = p.word()?;
                let right = if p.peek() == Some('=') {
                    p.pos += 1;
                    p.word()?
                } else {
                    Word::identity()
                };
                if p.peek().is_some() {
                    return Err(p.err("unexpected trailing input"));
                }
                relators.push(Relator { left, right });
            }
            other => {
                return Err(ParseError::syntax(line, kw_start + 1, format!("unknown directive `{other}`")));
            }
        }
    }
    let end = last_line + 1;
    let prime = prime.ok_or_else(|| ParseError::syntax(end, 1, "missing `prime` directive"))?;
    let generators =
        generators.ok_or_else(|| ParseError::syntax(end, 1, "missing `generators` directive"))?;
    Ok(Presentation { prime, generators, relators, alpha })
}

fn tokens_with_cols(chars: &[char], from: usize) -> Vec<(String, usize)> {
    let mut out = Vec::new();
    let mut pos = from;
    while pos < chars.len() {
        if chars[pos].is_whitespace() {
            pos += 1;
            continue;
        }
        let start = pos;
        while pos < chars.len() && !chars[pos].is_whitespace() {
            pos += 1;
        }
        out.push((chars[start..pos].iter().collect(), start + 1));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn names(n: usize) -> Vec<String> {
        (1..=n).map(|i| format!("g{i}")).collect()
    }

    fn pres(text: &str) -> Presentation {
        parse_presentation(text).unwrap()
    }

    #[test]
    fn commutator_atom() {
        let p = pres("prime 3\ngenerators g1 g2\nrelator [g1, g2]\n");
        assert_eq!(
            p.relators[0].left.syllables(),
            &[(0, -1), (1, -1), (0, 1), (1, 1)]
        );
        assert!(p.relators[0].right.is_identity());
    }

    #[test]
    fn equation_relator() {
        let p = pres("prime 3\ngenerators g1 g2\nrelator g1*g2 = g2*g1");
        assert_eq!(p.relators[0].left.syllables(), &[(0, 1), (1, 1)]);
        assert_eq!(p.relators[0].right.syllables(), &[(1, 1), (0, 1)]);
    }

    #[test]
    fn parse_errors() {
        let e = parse_presentation("prime 3\ngenerators g1\nrelator g1^0").unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::ZeroExponent);
        assert_eq!((e.line, e.col), (3, 12));
        let e = parse_presentation("prime 3\ngenerators g1\nrelator g1*h").unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::UnknownGenerator("h".into()));
        assert_eq!((e.line, e.col), (3, 12));
        let e = parse_presentation("prime 3\ngenerators g1 g1").unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::DuplicateGenerator("g1".into()));
        let e = parse_presentation("prime 3\ngenerators g1\nrelator (g1").unwrap_err();
        assert!(matches!(e.kind, ParseErrorKind::Syntax(_)));
        assert!(parse_presentation("prime 4\ngenerators g1").is_err());
        assert!(parse_presentation("generators g1").is_err());
        assert!(parse_presentation("prime 3\nrelator g1").is_err());
        assert!(parse_presentation("prime 3\ngenerators g1\nrelator g1^99999999999999999999").is_err());
    }

    #[test]
    fn comments_and_alpha() {
        let p = pres("# header\nprime 5 # five\ngenerators a b\nalpha b=2\nrelator a^2 = b\n");
        assert_eq!(p.alpha, vec![1, 2]);
        let r = p.validate().unwrap();
        assert_eq!(r.degrees, vec![0]);
        assert_eq!(r.failures.len(), 1);
        let q = pres("prime 5\ngenerators a b\nalpha b=2\nrelator a*b^-1");
        let r = q.validate().unwrap();
        assert_eq!(r.degrees, vec![-1]);
        assert!(!r.alpha_ok);
    }

    #[test]
    fn reduction() {
        let w = Word::from_syllables([(0, 1), (0, -1)]).unwrap();
        assert!(w.is_identity());
        let w = Word::from_syllables([(0, 2), (0, 3)]).unwrap();
        assert_eq!(w.syllables(), &[(0, 5)]);
        let w = Word::from_syllables([(0, 1), (1, 3)]).unwrap();
        assert_eq!(w.inv().syllables(), &[(1, -3), (0, -1)]);
        assert!(Word::power_of(0, i64::MAX).try_mul(&Word::generator(0)).is_err());
    }

    #[test]
    fn powers() {
        let n = names(2);
        let p = Presentation::new(3, n.clone(), vec![]);
        let w = p.parse_word("(g2*g1^-1)^9").unwrap();
        assert_eq!(w.syllables().len(), 18);
        assert_eq!(w.total_degree(&[1, 1]), 0);
        let c = p.parse_word("(g1*g2^3*g1^-1)^-4").unwrap();
        assert_eq!(c.syllables(), &[(0, 1), (1, -12), (0, -1)]);
        assert_eq!(p.parse_word("g1^2*g2").unwrap().total_degree(&[1, 1]), 3);
        assert_eq!(Word::identity().total_degree(&[1, 1]), 0);
        assert!(p.parse_word("1").unwrap().is_identity());
        assert!(p.parse_word("(g1*g2)^1000000000").is_err());
    }

    #[test]
    fn validation_messages() {
        let p = pres("prime 3\ngenerators g1\nrelator g1");
        let r = p.validate().unwrap();
        assert_eq!(r.degrees, vec![1]);
        assert_eq!(r.failures, vec!["relator 1 has total degree 1".to_string()]);
        assert!(matches!(p.require_valid(), Err(Error::HypothesisViolated(_))));
        let p = pres("prime 3\ngenerators g1 g2 g3\nalpha g2=2\nrelator g1*g3^-1");
        let r = p.validate().unwrap();
        assert!(!r.alpha_ok);
        assert!(r.failures[0].contains("alpha not constant-γ"));
    }

    #[test]
    fn display_round_trip() {
        let text = "prime 3\ngenerators g1 g2 g3\nalpha g1=1 g2=1 g3=2\nrelator (g2*g1^-1)^9\nrelator g2*g1 = g1*g2\nrelator 1 = g3*g3^-1\n";
        let p = pres(text);
        assert_eq!(pres(&p.to_string()), p);
    }

    fn arb_word(n: usize, len: usize) -> impl Strategy<Value = Word> {
        prop::collection::vec((0..n, prop_oneof![-3i64..0, 1i64..4]), 0..len)
            .prop_map(|s| Word::from_syllables(s).unwrap())
    }

    proptest! {
        #[test]
        fn group_axioms(u in arb_word(3, 20), v in arb_word(3, 20), w in arb_word(3, 20)) {
            let again = Word::from_syllables(u.syllables().iter().copied()).unwrap();
            prop_assert_eq!(&again, &u);
            prop_assert_eq!(u.mul(&v).mul(&w), u.mul(&v.mul(&w)));
            prop_assert!(u.mul(&u.inv()).is_identity());
        }

        #[test]
        fn degree_is_homomorphism(u in arb_word(3, 20), v in arb_word(3, 20), a in prop::collection::vec(-3i64..4, 3)) {
            prop_assert_eq!(u.mul(&v).total_degree(&a), u.total_degree(&a) + v.total_degree(&a));
            prop_assert_eq!(u.inv().total_degree(&a), -u.total_degree(&a));
        }

        #[test]
        fn pow_matches_repeated_product(u in arb_word(3, 6), n in -5i64..6) {
            let mut expect = Word::identity();
            let step = if n < 0 { u.inv() } else { u.clone() };
            for _ in 0..n.unsigned_abs() {
                expect = expect.mul(&step);
            }
            prop_assert_eq!(u.pow(n), expect);
        }

        #[test]
        fn print_parse_round_trip(rels in prop::collection::vec((arb_word(3, 8), arb_word(3, 8)), 0..4), alpha in prop::collection::vec(-2i64..3, 3)) {
            let mut p = Presentation::new(3, names(3), rels.into_iter().map(|(l, r)| Relator::equation(l, r)).collect());
            p.alpha = alpha;
            prop_assert_eq!(parse_presentation(&p.to_string()).unwrap(), p);
        }
    }
}
