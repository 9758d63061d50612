//! Text form of relations: `coeff * sym*sym*... + ...`, scalars in the
//! coefficient grammar and symbols as printed by [`Symbol`]'s `Display`.

use num_traits::One;

use super::{Relation, Symbol, TableRef, Term, Word};
use crate::coeffring::{parse_factor, parse_sum, QuarterShift, RingElem};
use crate::cursor::Cursor;
use crate::error::{Error, Result};
use crate::glinf::ConventionTable;

const TABLE_NAMES: [&str; 4] = ["std_dual", "std", "paper_wp", "paper_w"];

pub fn parse_relation(name: &str, text: &str) -> Result<Relation> {
    let mut cur = Cursor::new(text);
    let mut rel = Relation::new(name, Vec::new());
    let mut negate = if cur.eat('-') {
        true
    } else {
        cur.eat('+');
        false
    };
    loop {
        let (coeff, word) = parse_term(&mut cur)?;
        let coeff = if negate { -coeff } else { coeff };
        rel.terms.push(Term {
            coeff,
            shift: QuarterShift::NONE,
            word,
        });
        if cur.eat('+') {
            negate = false;
        } else if cur.eat('-') {
            negate = true;
        } else if cur.at_end() {
            return Ok(rel);
        } else {
            return Err(cur.error("expected '+', '-' or end of input"));
        }
    }
}

pub fn parse_symbol(text: &str) -> Result<Symbol> {
    let mut cur = Cursor::new(text);
    let s = symbol(&mut cur)?;
    if !cur.at_end() {
        return Err(cur.error("unexpected trailing input"));
    }
    Ok(s)
}

fn parse_term(cur: &mut Cursor<'_>) -> Result<(RingElem, Word)> {
    let mut coeff = RingElem::one();
    let mut symbols = Vec::new();
    loop {
        match parse_factor(cur)? {
            Some(x) => coeff = &coeff * &x,
            None => symbols.push(symbol(cur)?),
        }
        if !cur.eat('*') {
            return Ok((coeff, Word::of(symbols)));
        }
    }
}

fn symbol(cur: &mut Cursor<'_>) -> Result<Symbol> {
    let at = {
        cur.skip_ws();
        cur.pos()
    };
    let Some(name) = cur.ident() else {
        return Err(cur.error("expected a generator"));
    };
    let s = match name {
        "inv" => {
            cur.expect('(')?;
            let inner = symbol(cur)?;
            cur.expect(')')?;
            return Ok(inner.inv());
        }
        "e" | "f" | "a" | "b" => {
            let i = bracketed(cur, |c| c.signed_i64())?;
            match name {
                "e" => Symbol::e(i),
                "f" => Symbol::f(i),
                "a" => Symbol::a(i),
                _ => Symbol::b(i),
            }
        }
        "K" | "P" => {
            cur.expect('[')?;
            let i = cur.signed_i64()?;
            cur.expect(';')?;
            let t = table_ref(cur)?;
            cur.expect(']')?;
            if name == "K" {
                Symbol::k(i, t)
            } else {
                Symbol::tail(i, t)
            }
        }
        "Efold" | "Ffold" | "W" | "Wp" => {
            let i = bracketed(cur, node)?;
            match name {
                "Efold" => Symbol::efold(i),
                "Ffold" => Symbol::ffold(i),
                "W" => Symbol::w(i),
                _ => Symbol::wp(i),
            }
        }
        "D" => Symbol::d(),
        "Dp" => Symbol::dp(),
        "gamma" => Symbol::gamma(),
        "gammap" => Symbol::gammap(),
        _ => return Err(Error::parse(at, format!("unknown generator {name:?}"))),
    };
    Ok(s)
}

fn bracketed<T>(cur: &mut Cursor<'_>, inner: impl Fn(&mut Cursor<'_>) -> Result<T>) -> Result<T> {
    cur.expect('[')?;
    let x = inner(cur)?;
    cur.expect(']')?;
    Ok(x)
}

fn node(cur: &mut Cursor<'_>) -> Result<usize> {
    let at = cur.pos();
    cur.unsigned()?
        .try_into()
        .map_err(|_| Error::parse(at, "node out of range"))
}

/// `$n`, a preset name, or `cc,cv` as two monomials with coefficient 1.
fn table_ref(cur: &mut Cursor<'_>) -> Result<TableRef> {
    if cur.eat('$') {
        return node(cur).map(TableRef::Slot);
    }
    for name in TABLE_NAMES {
        if cur.eat_keyword(name) {
            let t = ConventionTable::preset(name).expect("listed preset");
            return Ok(TableRef::Fixed(t));
        }
    }
    let cc = table_entry(cur)?;
    cur.expect(',')?;
    let cv = table_entry(cur)?;
    Ok(TableRef::Fixed(ConventionTable::new(cc, cv)))
}

fn table_entry(cur: &mut Cursor<'_>) -> Result<crate::coeffring::Monomial> {
    cur.skip_ws();
    let at = cur.pos();
    let x = parse_sum(cur)?;
    match x.as_monomial() {
        Some((m, c)) if c.is_one() => Ok(m),
        _ => Err(Error::parse(
            at,
            format!("table entry {x} is not a monomial"),
        )),
    }
}
