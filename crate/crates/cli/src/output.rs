//! Where output goes and how it is encoded.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::Path;

use serde::Serialize;

use crate::commands::CliError;

pub struct Sink {
    inner: Box<dyn Write>,
}

impl Sink {
    pub fn open(out: Option<&Path>) -> Result<Sink, CliError> {
        let inner: Box<dyn Write> = match out {
            Some(path) => {
                Box::new(BufWriter::new(File::create(path).map_err(|e| CliError::Io(path.display().to_string(), e))?))
            }
            None => Box::new(BufWriter::new(io::stdout().lock())),
        };
        Ok(Sink { inner })
    }

    /// One pretty-printed JSON document.
    pub fn json<T: Serialize>(&mut self, value: &T) -> Result<(), CliError> {
        serde_json::to_writer_pretty(&mut self.inner, value).map_err(CliError::Json)?;
        writeln!(self.inner).map_err(CliError::Output)
    }

    /// One compact JSON document per line.
    pub fn json_lines<T: Serialize>(&mut self, values: &[T]) -> Result<(), CliError> {
        for v in values {
            serde_json::to_writer(&mut self.inner, v).map_err(CliError::Json)?;
            writeln!(self.inner).map_err(CliError::Output)?;
        }
        Ok(())
    }

    /// Header row from the field names, LF line endings.
    pub fn csv<T: Serialize>(&mut self, rows: &[T]) -> Result<(), CliError> {
        let mut writer = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(&mut self.inner);
        for row in rows {
            writer.serialize(row).map_err(CliError::Csv)?;
        }
        writer.flush().map_err(CliError::Output)
    }

    pub fn line(&mut self, text: &str) -> Result<(), CliError> {
        writeln!(self.inner, "{text}").map_err(CliError::Output)
    }

    pub fn finish(mut self) -> Result<(), CliError> {
        self.inner.flush().map_err(CliError::Output)
    }
}
