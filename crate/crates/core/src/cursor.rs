//! Byte cursor shared by the small hand-written parsers in this crate.

use num_bigint::BigInt;

use crate::error::{Error, Result};

pub(crate) struct Cursor<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    pub(crate) fn new(src: &'a str) -> Self {
        Cursor { src, pos: 0 }
    }

    pub(crate) fn pos(&self) -> usize {
        self.pos
    }

    pub(crate) fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    pub(crate) fn skip_ws(&mut self) {
        while let Some(c) = self.peek_raw() {
            if c.is_whitespace() {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
    }

    fn peek_raw(&self) -> Option<char> {
        self.rest().chars().next()
    }

    /// Next non-whitespace character, without consuming it.
    pub(crate) fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.peek_raw()
    }

    pub(crate) fn at_end(&mut self) -> bool {
        self.peek().is_none()
    }

    pub(crate) fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    pub(crate) fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(format!("expected '{c}'")))
        }
    }

    /// Consumes `word` if the input continues with it and the following
    /// character is not part of an identifier.
    pub(crate) fn eat_keyword(&mut self, word: &str) -> bool {
        self.skip_ws();
        let rest = self.rest();
        if let Some(after) = rest.strip_prefix(word) {
            let boundary = after
                .chars()
                .next()
                .is_none_or(|c| !(c.is_alphanumeric() || c == '_'));
            if boundary {
                self.pos += word.len();
                return true;
            }
        }
        false
    }

    pub(crate) fn ident(&mut self) -> Option<&'a str> {
        self.skip_ws();
        let rest = self.rest();
        let len = rest
            .char_indices()
            .find(|&(i, c)| !(c.is_ascii_alphabetic() || c == '_' || (i > 0 && c.is_ascii_digit())))
            .map_or(rest.len(), |(i, _)| i);
        if len == 0 {
            None
        } else {
            self.pos += len;
            Some(&rest[..len])
        }
    }

    pub(crate) fn unsigned(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let rest = self.rest();
        let len = rest
            .char_indices()
            .find(|&(_, c)| !c.is_ascii_digit())
            .map_or(rest.len(), |(i, _)| i);
        if len == 0 {
            return Err(self.error("expected digits"));
        }
        let n = rest[..len]
            .parse::<BigInt>()
            .map_err(|e| self.error(e.to_string()))?;
        self.pos += len;
        Ok(n)
    }

    pub(crate) fn signed_i64(&mut self) -> Result<i64> {
        let neg = if self.eat('-') {
            true
        } else {
            self.eat('+');
            false
        };
        let start = self.pos;
        let n = self.unsigned()?;
        let n: i64 = n
            .try_into()
            .map_err(|_| Error::parse(start, "integer out of range"))?;
        Ok(if neg { -n } else { n })
    }

    pub(crate) fn error(&self, msg: impl Into<String>) -> Error {
        Error::parse(self.pos, msg)
    }
}
