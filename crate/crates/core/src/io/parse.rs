//! Line-oriented parser for definition documents.

use super::expr::{parse_expr, tokenize_line, EvalContext, Token, TokenKind, Value};
use super::{DefinitionDocument, ParseError, Pos};
use crate::algebra::{AlgebraElement, StructureAlgebra, TensorElement};
use crate::hopf::HopfData;
use crate::partial_action::PartialActionData;
use crate::symbolic::{Parameter, Polynomial};
use std::collections::BTreeSet;
use std::sync::Arc;

/// One statement: the tokens of a non-empty line.
struct Stmt {
    tokens: Vec<Token>,
    pos: Pos,
}

impl Stmt {
    fn keyword(&self) -> Option<&str> {
        match &self.tokens[0].kind {
            TokenKind::Ident(s) => Some(s.as_str()),
            _ => None,
        }
    }
}

struct RawBlock {
    kind: BlockKind,
    name: String,
    pos: Pos,
    stmts: Vec<Stmt>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum BlockKind {
    Algebra,
    Hopf,
    Action,
}

/// Parses and validates a definition document.
pub fn parse_definition(text: &str) -> Result<DefinitionDocument, ParseError> {
    let mut doc = DefinitionDocument::default();
    let mut blocks: Vec<RawBlock> = Vec::new();
    let mut current: Option<RawBlock> = None;
    let mut seen_params: BTreeSet<String> = BTreeSet::new();

    for (idx, line) in text.lines().enumerate() {
        let line_no = idx + 1;
        let tokens = tokenize_line(line, line_no)?;
        if tokens.is_empty() {
            continue;
        }
        let pos = tokens[0].pos;
        let stmt = Stmt { tokens, pos };

        if let Some(block) = current.as_mut() {
            if stmt.tokens.len() == 1 && stmt.tokens[0].kind == TokenKind::Sym('}') {
                blocks.push(current.take().unwrap());
            } else {
                block.stmts.push(stmt);
            }
            continue;
        }

        match stmt.keyword() {
            Some("name") => {
                let name = expect_single_label(&stmt, "name")?;
                doc.name = Some(name);
            }
            Some("note") => match stmt.tokens.get(1).map(|t| &t.kind) {
                Some(TokenKind::Str(s)) if stmt.tokens.len() == 2 => {
                    doc.note = Some(s.clone());
                }
                _ => {
                    return Err(ParseError::Syntax {
                        pos,
                        message: "expected `note \"...\"`".into(),
                    })
                }
            },
            Some("params") => {
                for t in &stmt.tokens[1..] {
                    match &t.kind {
                        TokenKind::Ident(s) => {
                            if !seen_params.insert(s.clone()) {
                                return Err(ParseError::DuplicateEntry {
                                    what: format!("parameter `{s}`"),
                                    pos: t.pos,
                                });
                            }
                            doc.parameters.push(s.clone());
                        }
                        _ => {
                            return Err(ParseError::Syntax {
                                pos: t.pos,
                                message: "parameter names must be identifiers".into(),
                            })
                        }
                    }
                }
            }
            Some(kw @ ("algebra" | "hopf" | "action")) => {
                let kind = match kw {
                    "algebra" => BlockKind::Algebra,
                    "hopf" => BlockKind::Hopf,
                    _ => BlockKind::Action,
                };
                if stmt.tokens.len() != 3
                    || stmt.tokens[1].as_label().is_none()
                    || stmt.tokens[2].kind != TokenKind::Sym('{')
                {
                    return Err(ParseError::Syntax {
                        pos,
                        message: format!("expected `{kw} <name> {{`"),
                    });
                }
                let name = stmt.tokens[1].as_label().unwrap().to_string();
                if blocks.iter().any(|b| b.name == name) {
                    return Err(ParseError::DuplicateBlock { name });
                }
                current = Some(RawBlock {
                    kind,
                    name,
                    pos,
                    stmts: Vec::new(),
                });
            }
            _ => {
                return Err(ParseError::Syntax {
                    pos,
                    message: format!("unexpected {}", stmt.tokens[0].describe()),
                })
            }
        }
    }

    if let Some(block) = current {
        return Err(ParseError::Syntax {
            pos: block.pos,
            message: format!("block `{}` is never closed", block.name),
        });
    }

    let params: BTreeSet<String> = doc.parameters.iter().cloned().collect();
    for block in &blocks {
        match block.kind {
            BlockKind::Algebra => {
                let algebra = build_algebra(block, &params)?;
                doc.algebras.push(Arc::new(algebra));
            }
            BlockKind::Hopf => {
                let hopf = build_hopf(block, &params)?;
                doc.hopfs.push(hopf);
            }
            BlockKind::Action => {
                let action = build_action(block, &params, &doc)?;
                doc.actions.push(action);
            }
        }
    }
    Ok(doc)
}

fn expect_single_label(stmt: &Stmt, kw: &str) -> Result<String, ParseError> {
    if stmt.tokens.len() == 2 {
        if let Some(l) = stmt.tokens[1].as_label() {
            return Ok(l.to_string());
        }
    }
    Err(ParseError::Syntax {
        pos: stmt.pos,
        message: format!("expected `{kw} <identifier>`"),
    })
}

/// Splits `<keyword> <labels...> = <expr tokens...>`; returns the label
/// tokens and the expression tokens.
fn split_assignment<'a>(stmt: &'a Stmt) -> Result<(&'a [Token], &'a [Token]), ParseError> {
    let eq = stmt
        .tokens
        .iter()
        .position(|t| t.kind == TokenKind::Sym('='))
        .ok_or_else(|| ParseError::Syntax {
            pos: stmt.pos,
            message: "expected `=`".into(),
        })?;
    Ok((&stmt.tokens[1..eq], &stmt.tokens[eq + 1..]))
}

fn end_pos(stmt: &Stmt) -> Pos {
    let last = stmt.tokens.last().unwrap();
    Pos {
        line: last.pos.line,
        col: last.pos.col + 1,
    }
}

fn label_index(algebra: &StructureAlgebra, token: &Token) -> Result<usize, ParseError> {
    let label = token.as_label().ok_or_else(|| ParseError::Syntax {
        pos: token.pos,
        message: format!("expected a basis label, found {}", token.describe()),
    })?;
    algebra
        .index_of(label)
        .ok_or_else(|| ParseError::UndeclaredLabel {
            name: label.to_string(),
            pos: token.pos,
        })
}

/// The algebra-shaped statements shared by `algebra` and `hopf` blocks.
struct AlgebraParts {
    algebra: Arc<StructureAlgebra>,
    /// Statements that were not consumed (delta/counit/antipode for hopf
    /// blocks).
    rest: Vec<usize>,
}

fn build_algebra_parts(
    block: &RawBlock,
    params: &BTreeSet<String>,
    extra_keywords: &[&str],
) -> Result<AlgebraParts, ParseError> {
    let mut basis: Option<(Vec<String>, Pos)> = None;
    // First pass: the basis declaration.
    for stmt in &block.stmts {
        if stmt.keyword() == Some("basis") {
            if basis.is_some() {
                return Err(ParseError::DuplicateEntry {
                    what: "basis declaration".into(),
                    pos: stmt.pos,
                });
            }
            let mut labels = Vec::new();
            for t in &stmt.tokens[1..] {
                let label = t.as_label().ok_or_else(|| ParseError::Syntax {
                    pos: t.pos,
                    message: "basis labels must be identifiers or digits".into(),
                })?;
                if labels.iter().any(|l| l == label) {
                    return Err(ParseError::DuplicateEntry {
                        what: format!("basis label `{label}`"),
                        pos: t.pos,
                    });
                }
                labels.push(label.to_string());
            }
            if labels.is_empty() {
                return Err(ParseError::Syntax {
                    pos: stmt.pos,
                    message: "empty basis".into(),
                });
            }
            basis = Some((labels, stmt.pos));
        }
    }
    let (labels, _) = basis.ok_or_else(|| ParseError::Missing {
        block: block.name.clone(),
        what: "a `basis` declaration".into(),
    })?;
    let dim = labels.len();

    // Temporary algebra with a zero table, used as the label scope while
    // evaluating the right-hand sides.
    let zero_table = vec![vec![vec![Polynomial::zero(); dim]; dim]; dim];
    let mut unit_coords: Option<Vec<Polynomial>> = None;
    let scope = Arc::new(
        StructureAlgebra::new(
            block.name.clone(),
            labels.clone(),
            vec![Polynomial::zero(); dim],
            zero_table.clone(),
        )
        .map_err(|e| ParseError::Structure(e.to_string()))?,
    );

    // Second pass: the unit line (needed before any element coercion).
    for stmt in &block.stmts {
        if stmt.keyword() != Some("unit") {
            continue;
        }
        if unit_coords.is_some() {
            return Err(ParseError::DuplicateEntry {
                what: "unit declaration".into(),
                pos: stmt.pos,
            });
        }
        let value_tokens = &stmt.tokens[1..];
        if value_tokens.len() == 1 {
            if let Some(label) = value_tokens[0].as_label() {
                if let Some(i) = scope.index_of(label) {
                    let mut coords = vec![Polynomial::zero(); dim];
                    coords[i] = Polynomial::one();
                    unit_coords = Some(coords);
                    continue;
                }
            }
        }
        let ctx = EvalContext {
            parameters: params,
            primary: &scope,
            secondary: None,
            action: None,
        };
        let expr = parse_expr(value_tokens, end_pos(stmt))?;
        match ctx.eval(&expr, Some(&scope))? {
            Value::Elem(e) => unit_coords = Some(e.coords().to_vec()),
            _ => {
                return Err(ParseError::Eval {
                    pos: stmt.pos,
                    message: "the unit must be an element of the algebra".into(),
                })
            }
        }
    }
    let unit = unit_coords.ok_or_else(|| ParseError::Missing {
        block: block.name.clone(),
        what: "a `unit` declaration".into(),
    })?;

    // Re-scope with the resolved unit so scalar values coerce correctly.
    let scope = Arc::new(
        StructureAlgebra::new(
            block.name.clone(),
            labels.clone(),
            unit.clone(),
            zero_table.clone(),
        )
        .map_err(|e| ParseError::Structure(e.to_string()))?,
    );

    // Third pass: products; omitted entries stay zero.
    let mut table = zero_table;
    let mut given: BTreeSet<(usize, usize)> = BTreeSet::new();
    let mut rest = Vec::new();
    for (i, stmt) in block.stmts.iter().enumerate() {
        match stmt.keyword() {
            Some("basis") | Some("unit") => {}
            Some("mul") => {
                let (keys, value_tokens) = split_assignment(stmt)?;
                if keys.len() != 2 {
                    return Err(ParseError::Syntax {
                        pos: stmt.pos,
                        message: "expected `mul <label> <label> = <element>`".into(),
                    });
                }
                let a = label_index(&scope, &keys[0])?;
                let b = label_index(&scope, &keys[1])?;
                if !given.insert((a, b)) {
                    return Err(ParseError::DuplicateEntry {
                        what: format!(
                            "product `{} {}`",
                            scope.label(a),
                            scope.label(b)
                        ),
                        pos: stmt.pos,
                    });
                }
                let ctx = EvalContext {
                    parameters: params,
                    primary: &scope,
                    secondary: None,
                    action: None,
                };
                let expr = parse_expr(value_tokens, end_pos(stmt))?;
                let coords = match ctx.eval(&expr, Some(&scope))? {
                    Value::Elem(e) => e.coords().to_vec(),
                    Value::Scalar(s) => {
                        // Scalars coerce through the declared unit.
                        unit.iter().map(|u| u * &s).collect()
                    }
                    Value::Tensor(_) => {
                        return Err(ParseError::Eval {
                            pos: stmt.pos,
                            message: "a product entry cannot be a tensor".into(),
                        })
                    }
                };
                table[a][b] = coords;
            }
            Some(kw) if extra_keywords.contains(&kw) => rest.push(i),
            _ => {
                return Err(ParseError::Syntax {
                    pos: stmt.pos,
                    message: format!("unexpected {}", stmt.tokens[0].describe()),
                })
            }
        }
    }

    let algebra = StructureAlgebra::new(block.name.clone(), labels, unit, table)
        .map_err(|e| ParseError::Structure(e.to_string()))?;
    Ok(AlgebraParts {
        algebra: Arc::new(algebra),
        rest,
    })
}

fn build_algebra(
    block: &RawBlock,
    params: &BTreeSet<String>,
) -> Result<StructureAlgebra, ParseError> {
    let parts = build_algebra_parts(block, params, &[])?;
    Ok((*parts.algebra).clone())
}

/// Element values are evaluated against `algebra` with undeclared names
/// reported as parameters (key positions report labels instead).
fn eval_element(
    stmt: &Stmt,
    value_tokens: &[Token],
    params: &BTreeSet<String>,
    algebra: &Arc<StructureAlgebra>,
) -> Result<AlgebraElement, ParseError> {
    let ctx = EvalContext {
        parameters: params,
        primary: algebra,
        secondary: None,
        action: None,
    };
    let expr = parse_expr(value_tokens, end_pos(stmt))?;
    match ctx.eval(&expr, Some(algebra))? {
        Value::Elem(e) => Ok(e),
        Value::Scalar(s) => Ok(AlgebraElement::unit(algebra).scale(&s)),
        Value::Tensor(_) => Err(ParseError::Eval {
            pos: stmt.pos,
            message: "expected an element, found a tensor".into(),
        }),
    }
}

fn build_hopf(block: &RawBlock, params: &BTreeSet<String>) -> Result<HopfData, ParseError> {
    let parts = build_algebra_parts(block, params, &["delta", "counit", "antipode"])?;
    let algebra = parts.algebra;
    let dim = algebra.dim();

    let mut delta: Vec<Option<Vec<(usize, usize, Polynomial)>>> = vec![None; dim];
    let mut counit: Vec<Option<Polynomial>> = vec![None; dim];
    let mut antipode: Vec<Option<AlgebraElement>> = vec![None; dim];

    for &i in &parts.rest {
        let stmt = &block.stmts[i];
        let kw = stmt.keyword().unwrap();
        let (keys, value_tokens) = split_assignment(stmt)?;
        if keys.len() != 1 {
            return Err(ParseError::Syntax {
                pos: stmt.pos,
                message: format!("expected `{kw} <label> = ...`"),
            });
        }
        let b = label_index(&algebra, &keys[0])?;
        match kw {
            "delta" => {
                if delta[b].is_some() {
                    return Err(ParseError::DuplicateEntry {
                        what: format!("delta for `{}`", algebra.label(b)),
                        pos: stmt.pos,
                    });
                }
                let ctx = EvalContext {
                    parameters: params,
                    primary: &algebra,
                    secondary: None,
                    action: None,
                };
                let expr = parse_expr(value_tokens, end_pos(stmt))?;
                let tensor = match ctx.eval(&expr, Some(&algebra))? {
                    Value::Tensor(t) => t,
                    Value::Scalar(s) if s.is_zero() => TensorElement::zero(&algebra, &algebra),
                    _ => {
                        return Err(ParseError::Eval {
                            pos: stmt.pos,
                            message: "a coproduct must be a sum of `left:right` pairs".into(),
                        })
                    }
                };
                delta[b] = Some(
                    tensor
                        .terms()
                        .map(|((l, r), c)| (l, r, c.clone()))
                        .collect(),
                );
            }
            "counit" => {
                if counit[b].is_some() {
                    return Err(ParseError::DuplicateEntry {
                        what: format!("counit for `{}`", algebra.label(b)),
                        pos: stmt.pos,
                    });
                }
                let ctx = EvalContext {
                    parameters: params,
                    primary: &algebra,
                    secondary: None,
                    action: None,
                };
                let expr = parse_expr(value_tokens, end_pos(stmt))?;
                match ctx.eval(&expr, Some(&algebra))? {
                    Value::Scalar(s) => counit[b] = Some(s),
                    _ => {
                        return Err(ParseError::Eval {
                            pos: stmt.pos,
                            message: "a counit value must be a scalar".into(),
                        })
                    }
                }
            }
            "antipode" => {
                if antipode[b].is_some() {
                    return Err(ParseError::DuplicateEntry {
                        what: format!("antipode for `{}`", algebra.label(b)),
                        pos: stmt.pos,
                    });
                }
                antipode[b] = Some(eval_element(stmt, value_tokens, params, &algebra)?);
            }
            _ => unreachable!(),
        }
    }

    let missing = |what: &str, idx: usize| ParseError::Missing {
        block: block.name.clone(),
        what: format!("{what} for basis element `{}`", algebra.label(idx)),
    };
    let delta: Vec<_> = delta
        .into_iter()
        .enumerate()
        .map(|(i, d)| d.ok_or_else(|| missing("a `delta` line", i)))
        .collect::<Result<_, _>>()?;
    let counit: Vec<_> = counit
        .into_iter()
        .enumerate()
        .map(|(i, c)| c.ok_or_else(|| missing("a `counit` line", i)))
        .collect::<Result<_, _>>()?;
    let antipode: Vec<_> = antipode
        .into_iter()
        .enumerate()
        .map(|(i, s)| s.ok_or_else(|| missing("an `antipode` line", i)))
        .collect::<Result<_, _>>()?;

    HopfData::new(algebra, delta, counit, antipode)
        .map_err(|e| ParseError::Structure(e.to_string()))
}

fn build_action(
    block: &RawBlock,
    params: &BTreeSet<String>,
    doc: &DefinitionDocument,
) -> Result<PartialActionData, ParseError> {
    let mut hopf: Option<&HopfData> = None;
    let mut target: Option<&Arc<StructureAlgebra>> = None;

    for stmt in &block.stmts {
        match stmt.keyword() {
            Some("hopf") => {
                let name = expect_single_label(stmt, "hopf")?;
                hopf = Some(doc.hopf(&name).ok_or(ParseError::UnknownReference {
                    name,
                    pos: stmt.pos,
                })?);
            }
            Some("target") => {
                let name = expect_single_label(stmt, "target")?;
                target = Some(doc.algebra(&name).ok_or(ParseError::UnknownReference {
                    name,
                    pos: stmt.pos,
                })?);
            }
            _ => {}
        }
    }
    let hopf = hopf.ok_or_else(|| ParseError::Missing {
        block: block.name.clone(),
        what: "a `hopf` reference".into(),
    })?;
    let target = target.ok_or_else(|| ParseError::Missing {
        block: block.name.clone(),
        what: "a `target` reference".into(),
    })?;

    let dim_h = hopf.dim();
    let dim_a = target.dim();
    let mut action = vec![vec![AlgebraElement::zero(target); dim_a]; dim_h];
    let mut cocycle = vec![vec![AlgebraElement::zero(target); dim_h]; dim_h];
    let mut given_act: BTreeSet<(usize, usize)> = BTreeSet::new();
    let mut given_coc: BTreeSet<(usize, usize)> = BTreeSet::new();

    for stmt in &block.stmts {
        match stmt.keyword() {
            Some("hopf") | Some("target") => {}
            Some("act") => {
                let (keys, value_tokens) = split_assignment(stmt)?;
                if keys.len() != 2 {
                    return Err(ParseError::Syntax {
                        pos: stmt.pos,
                        message: "expected `act <h-label> <a-label> = <element>`".into(),
                    });
                }
                let h = label_index(hopf.algebra(), &keys[0])?;
                let a = label_index(target, &keys[1])?;
                if !given_act.insert((h, a)) {
                    return Err(ParseError::DuplicateEntry {
                        what: format!(
                            "action entry `{} {}`",
                            hopf.algebra().label(h),
                            target.label(a)
                        ),
                        pos: stmt.pos,
                    });
                }
                action[h][a] = eval_element(stmt, value_tokens, params, target)?;
            }
            Some("cocycle") => {
                let (keys, value_tokens) = split_assignment(stmt)?;
                if keys.len() != 2 {
                    return Err(ParseError::Syntax {
                        pos: stmt.pos,
                        message: "expected `cocycle <h-label> <h-label> = <element>`".into(),
                    });
                }
                let h = label_index(hopf.algebra(), &keys[0])?;
                let l = label_index(hopf.algebra(), &keys[1])?;
                if !given_coc.insert((h, l)) {
                    return Err(ParseError::DuplicateEntry {
                        what: format!(
                            "cocycle entry `{} {}`",
                            hopf.algebra().label(h),
                            hopf.algebra().label(l)
                        ),
                        pos: stmt.pos,
                    });
                }
                cocycle[h][l] = eval_element(stmt, value_tokens, params, target)?;
            }
            _ => {
                return Err(ParseError::Syntax {
                    pos: stmt.pos,
                    message: format!("unexpected {}", stmt.tokens[0].describe()),
                })
            }
        }
    }

    let parameters: Vec<Parameter> = doc.parameters.iter().map(Parameter::new).collect();
    PartialActionData::new(
        block.name.clone(),
        hopf.clone(),
        Arc::clone(target),
        action,
        cocycle,
        parameters,
    )
    .map_err(|e| ParseError::Structure(e.to_string()))
}
