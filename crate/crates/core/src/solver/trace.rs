use std::io::Write;
use std::sync::Mutex;

use serde_json::{Map, Value};

/// JSON-lines event sink; a disabled tracer drops everything.
#[derive(Default)]
pub struct Tracer {
    sink: Option<Mutex<Box<dyn Write + Send>>>,
}

impl Tracer {
    pub fn disabled() -> Self {
        Tracer { sink: None }
    }

    pub fn to_writer(w: Box<dyn Write + Send>) -> Self {
        Tracer { sink: Some(Mutex::new(w)) }
    }

    pub fn enabled(&self) -> bool {
        self.sink.is_some()
    }

    /// Writes `{"event": event, ...fields}` as one line. Write errors are
    /// ignored; tracing never changes the result.
    pub fn emit(&self, event: &str, fields: Value) {
        let Some(sink) = &self.sink else {
            return;
        };
        let mut obj = Map::new();
        obj.insert("event".into(), Value::String(event.into()));
        if let Value::Object(extra) = fields {
            obj.extend(extra);
        }
        let mut w = sink.lock().unwrap_or_else(|e| e.into_inner());
        let _ = writeln!(w, "{}", Value::Object(obj));
    }
}

impl std::fmt::Debug for Tracer {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Tracer").field("enabled", &self.enabled()).finish()
    }
}
