use super::{ExprError, Position, KEYWORDS};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TokenKind {
    Name,
    Amp,
    Pipe,
    /// `-` or `\`
    Minus,
    /// postfix `^c`
    CaretC,
    LParen,
    RParen,
    EmptyKw,
    UnivKw,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Token {
    pub kind: TokenKind,
    pub text: String,
    pub pos: Position,
}

pub fn tokenize(text: &str) -> Result<Vec<Token>, ExprError> {
    let mut tokens = Vec::new();
    let mut chars = text.chars().peekable();
    let (mut line, mut column) = (1, 1);

    while let Some(c) = chars.next() {
        let pos = Position { line, column };
        let mut width = 1;
        let kind = match c {
            '\n' => {
                line += 1;
                column = 1;
                continue;
            }
            c if c.is_whitespace() => {
                column += 1;
                continue;
            }
            '&' => TokenKind::Amp,
            '|' => TokenKind::Pipe,
            '-' | '\\' => TokenKind::Minus,
            '(' => TokenKind::LParen,
            ')' => TokenKind::RParen,
            '^' => {
                if chars.next_if_eq(&'c').is_none() {
                    return Err(ExprError::Lex {
                        pos,
                        message: "`^` must be followed by `c`".into(),
                    });
                }
                column += 2;
                tokens.push(Token {
                    kind: TokenKind::CaretC,
                    text: "^c".into(),
                    pos,
                });
                continue;
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let mut name = String::from(c);
                while let Some(next) = chars.next_if(|n| n.is_ascii_alphanumeric() || *n == '_') {
                    name.push(next);
                    width += 1;
                }
                column += width;
                let kind = match name.as_str() {
                    k if k == KEYWORDS[0] => TokenKind::EmptyKw,
                    k if k == KEYWORDS[1] => TokenKind::UnivKw,
                    _ => TokenKind::Name,
                };
                tokens.push(Token {
                    kind,
                    text: name,
                    pos,
                });
                continue;
            }
            other => {
                return Err(ExprError::Lex {
                    pos,
                    message: format!("illegal character `{other}`"),
                })
            }
        };
        column += width;
        tokens.push(Token {
            kind,
            text: c.to_string(),
            pos,
        });
    }
    Ok(tokens)
}
