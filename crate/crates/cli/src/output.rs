use std::io::{self, Write};

use clap::ValueEnum;
use serde_json::Value;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    /// One JSON object per line.
    JsonLines,
}

/// Writes one record at a time, flushing after each so that long streams
/// show up as they are produced.
pub struct Printer {
    format: Format,
    out: io::StdoutLock<'static>,
}

impl Printer {
    pub fn new(format: Format) -> Self {
        Printer {
            format,
            out: io::stdout().lock(),
        }
    }

    /// Emits `text` or `json`, depending on the format.
    pub fn record(&mut self, text: impl FnOnce() -> String, json: impl FnOnce() -> Value) -> io::Result<()> {
        match self.format {
            Format::Text => writeln!(self.out, "{}", text())?,
            Format::JsonLines => writeln!(self.out, "{}", json())?,
        }
        self.out.flush()
    }

    /// A line that only appears in text output, such as a table header.
    pub fn text_only(&mut self, line: &str) -> io::Result<()> {
        if self.format == Format::Text {
            writeln!(self.out, "{line}")?;
        }
        Ok(())
    }
}
