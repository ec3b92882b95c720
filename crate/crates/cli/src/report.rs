use std::fmt::Write as _;

use clap::ValueEnum;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputMode {
    /// Human-readable lines.
    Lines,
    /// Newline-delimited `key=value` records.
    Records,
}

/// One result, rendered either as a human line or as a `key=value` record.
pub struct Record {
    fields: Vec<(&'static str, String)>,
    line: String,
}

impl Record {
    pub fn new(command: &str, line: impl Into<String>) -> Self {
        Record {
            fields: vec![("command", command.to_owned())],
            line: line.into(),
        }
    }

    pub fn field(mut self, key: &'static str, value: impl ToString) -> Self {
        self.fields.push((key, value.to_string()));
        self
    }

    pub fn render(&self, mode: OutputMode) -> String {
        match mode {
            OutputMode::Lines => self.line.clone(),
            OutputMode::Records => {
                let mut out = String::new();
                for (i, (key, value)) in self.fields.iter().enumerate() {
                    if i > 0 {
                        out.push(' ');
                    }
                    let _ = write!(out, "{key}={}", quote(value));
                }
                out
            }
        }
    }
}

/// Values that are empty or contain spaces, quotes or `=` are written as
/// quoted strings.
fn quote(value: &str) -> String {
    if value.is_empty()
        || value
            .chars()
            .any(|c| c.is_whitespace() || c == '"' || c == '=' || c == '\\')
    {
        format!("{value:?}")
    } else {
        value.to_owned()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn records_quote_when_needed() {
        let r = Record::new("close", "a1,b1")
            .field("result", "a1,b1")
            .field("empty", "")
            .field("witness", "{x} <= {x,y}");
        assert_eq!(
            r.render(OutputMode::Records),
            r#"command=close result=a1,b1 empty="" witness="{x} <= {x,y}""#
        );
        assert_eq!(r.render(OutputMode::Lines), "a1,b1");
    }
}
