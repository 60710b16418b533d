//! Text format for words: whitespace-separated `i` and `g^<int>` terms, or
//! a lone `e` for the identity.

use std::fmt;

use super::{HeckeParams, Letter, Word};
use crate::error::{Error, Result};

pub fn parse_word(text: &str, params: &HeckeParams) -> Result<Word> {
    let mut letters = Vec::new();
    let mut saw_identity = false;
    let mut terms = 0usize;
    for (pos, token) in tokens(text) {
        terms += 1;
        match token {
            "e" => saw_identity = true,
            "i" => letters.push(Letter::Iota),
            _ => {
                let digits = token.strip_prefix("g^").ok_or_else(|| Error::Syntax {
                    pos,
                    message: format!("unexpected term `{token}`, expected `i`, `g^<int>` or `e`"),
                })?;
                let k: i64 = parse_int(digits).ok_or_else(|| Error::Syntax {
                    pos: pos + 2,
                    message: format!("invalid exponent `{digits}`"),
                })?;
                if let Some(k) = params.normalize_exponent(k) {
                    letters.push(Letter::Gamma(k));
                }
            }
        }
    }
    if terms == 0 {
        return Err(Error::Syntax {
            pos: 0,
            message: "empty word; write `e` for the identity".into(),
        });
    }
    if saw_identity && terms > 1 {
        return Err(Error::Syntax {
            pos: text.find('e').unwrap_or(0),
            message: "`e` must appear alone".into(),
        });
    }
    Ok(Word::from_letters(letters, params))
}

pub fn format_word(w: &Word) -> String {
    w.to_string()
}

fn tokens(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.split_ascii_whitespace()
        .map(move |t| (t.as_ptr() as usize - text.as_ptr() as usize, t))
}

fn parse_int(s: &str) -> Option<i64> {
    let digits = s.strip_prefix(['+', '-']).unwrap_or(s);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    s.parse().ok()
}

pub(crate) fn write_letters(f: &mut fmt::Formatter<'_>, letters: &[Letter]) -> fmt::Result {
    if letters.is_empty() {
        return f.write_str("e");
    }
    for (i, l) in letters.iter().enumerate() {
        if i > 0 {
            f.write_str(" ")?;
        }
        match l {
            Letter::Iota => f.write_str("i")?,
            Letter::Gamma(k) => write!(f, "g^{k}")?,
        }
    }
    Ok(())
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_letters(f, self.letters())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(n: u32) -> HeckeParams {
        HeckeParams::new(n).unwrap()
    }

    #[test]
    fn parse_examples() {
        let p5 = p(5);
        let word = parse_word("i g^3 i", &p5).unwrap();
        assert_eq!(
            word.letters(),
            &[Letter::Iota, Letter::Gamma(-2), Letter::Iota]
        );
        assert!(parse_word("i i", &p5).unwrap().is_identity());
        assert_eq!(parse_word("g^1 g^1", &p(3)).unwrap().to_string(), "g^-1");
        assert!(parse_word("e", &p5).unwrap().is_identity());
        assert_eq!(parse_word("  i\tg^+2  ", &p5).unwrap().to_string(), "i g^2");
        assert!(parse_word("g^0", &p5).unwrap().is_identity());
        assert!(parse_word("i g^5 i", &p5).unwrap().is_identity());
    }

    #[test]
    fn syntax_errors_carry_positions() {
        let p5 = p(5);
        match parse_word("i g^2 x", &p5) {
            Err(Error::Syntax { pos, .. }) => assert_eq!(pos, 6),
            other => panic!("unexpected {other:?}"),
        }
        match parse_word("i g^", &p5) {
            Err(Error::Syntax { pos, .. }) => assert_eq!(pos, 4),
            other => panic!("unexpected {other:?}"),
        }
        match parse_word("g^1-", &p5) {
            Err(Error::Syntax { pos, .. }) => assert_eq!(pos, 2),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(parse_word("", &p5), Err(Error::Syntax { pos: 0, .. })));
        assert!(matches!(parse_word("e i", &p5), Err(Error::Syntax { .. })));
        assert!(matches!(
            parse_word("g^99999999999999999999", &p5),
            Err(Error::Syntax { .. })
        ));
    }

    #[test]
    fn identity_prints_e() {
        assert_eq!(format_word(&Word::identity()), "e");
    }

    proptest! {
        #[test]
        fn format_parse_round_trip(p in 3u32..10, raw in prop::collection::vec((any::<bool>(), -20i64..20), 0..12)) {
            let params = HeckeParams::new(p).unwrap();
            let letters = raw.into_iter().map(|(iota, k)| if iota { Letter::Iota } else { Letter::Gamma(k as i32) });
            let word = Word::from_letters(letters, &params);
            let text = format_word(&word);
            let back = parse_word(&text, &params).unwrap();
            prop_assert_eq!(&back, &word);
            prop_assert_eq!(format_word(&back), text);
        }
    }
}
