use super::lexer::{tokenize, Token, TokenKind};
use super::{Expr, ExprError, Position};

struct Parser<'a> {
    tokens: &'a [Token],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&'a Token> {
        self.tokens.get(self.pos)
    }

    fn bump(&mut self) -> Option<&'a Token> {
        let tok = self.tokens.get(self.pos);
        self.pos += 1;
        tok
    }

    /// Position used for errors at end of input: the last token, so that the
    /// position stays inside the source.
    fn end_pos(&self) -> Position {
        self.tokens
            .last()
            .map(|t| t.pos)
            .unwrap_or(Position { line: 1, column: 1 })
    }

    fn error(pos: Position, message: impl Into<String>) -> ExprError {
        ExprError::Parse {
            pos,
            message: message.into(),
        }
    }

    fn expr(&mut self) -> Result<Expr, ExprError> {
        let mut lhs = self.term()?;
        while self.peek().is_some_and(|t| t.kind == TokenKind::Pipe) {
            self.bump();
            lhs = lhs.union(self.term()?);
        }
        Ok(lhs)
    }

    fn term(&mut self) -> Result<Expr, ExprError> {
        let mut lhs = self.postfix()?;
        loop {
            match self.peek().map(|t| t.kind) {
                Some(TokenKind::Amp) => {
                    self.bump();
                    lhs = lhs.intersect(self.postfix()?);
                }
                Some(TokenKind::Minus) => {
                    self.bump();
                    lhs = lhs.difference(self.postfix()?);
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn postfix(&mut self) -> Result<Expr, ExprError> {
        let mut e = self.atom()?;
        while self.peek().is_some_and(|t| t.kind == TokenKind::CaretC) {
            self.bump();
            e = e.complement();
        }
        Ok(e)
    }

    fn atom(&mut self) -> Result<Expr, ExprError> {
        let Some(tok) = self.bump() else {
            return Err(Self::error(
                self.end_pos(),
                "unexpected end of input, expected an operand",
            ));
        };
        match tok.kind {
            TokenKind::Name => Ok(Expr::Name(tok.text.clone())),
            TokenKind::EmptyKw => Ok(Expr::Empty),
            TokenKind::UnivKw => Ok(Expr::Universal),
            TokenKind::LParen => {
                let inner = self.expr()?;
                match self.bump() {
                    Some(t) if t.kind == TokenKind::RParen => Ok(inner),
                    Some(t) => Err(Self::error(
                        t.pos,
                        format!("unexpected `{}`, expected `)`", t.text),
                    )),
                    None => Err(Self::error(
                        tok.pos,
                        "unbalanced parenthesis: `(` is never closed",
                    )),
                }
            }
            _ => Err(Self::error(
                tok.pos,
                format!("unexpected `{}`, expected an operand", tok.text),
            )),
        }
    }
}

pub fn parse(tokens: &[Token]) -> Result<Expr, ExprError> {
    let mut parser = Parser { tokens, pos: 0 };
    let expr = parser.expr()?;
    if let Some(tok) = parser.peek() {
        let message = if tok.kind == TokenKind::RParen {
            "unbalanced parenthesis: unmatched `)`".to_string()
        } else {
            format!("unexpected `{}` after complete expression", tok.text)
        };
        return Err(Parser::error(tok.pos, message));
    }
    Ok(expr)
}

pub fn parse_str(text: &str) -> Result<Expr, ExprError> {
    parse(&tokenize(text)?)
}
