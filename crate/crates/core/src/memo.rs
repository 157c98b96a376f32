use std::collections::HashMap;
use std::hash::Hash;
use std::sync::{Arc, OnceLock, RwLock};

/// Append-only concurrent memo table. Values are computed outside the lock,
/// so recursive lookups are allowed; a racing duplicate computation keeps
/// whichever value was inserted first.
pub(crate) struct Memo<K, V> {
    map: OnceLock<RwLock<HashMap<K, Arc<V>>>>,
}

impl<K: Eq + Hash + Clone, V> Memo<K, V> {
    pub(crate) const fn new() -> Self {
        Memo { map: OnceLock::new() }
    }

    fn table(&self) -> &RwLock<HashMap<K, Arc<V>>> {
        self.map.get_or_init(|| RwLock::new(HashMap::new()))
    }

    pub(crate) fn get(&self, key: &K) -> Option<Arc<V>> {
        self.table().read().expect("memo lock poisoned").get(key).cloned()
    }

    pub(crate) fn get_or_insert_with(&self, key: K, compute: impl FnOnce() -> V) -> Arc<V> {
        if let Some(v) = self.get(&key) {
            return v;
        }
        let value = Arc::new(compute());
        let mut guard = self.table().write().expect("memo lock poisoned");
        guard.entry(key).or_insert(value).clone()
    }

    pub(crate) fn try_get_or_insert_with<E>(
        &self,
        key: K,
        compute: impl FnOnce() -> Result<V, E>,
    ) -> Result<Arc<V>, E> {
        if let Some(v) = self.get(&key) {
            return Ok(v);
        }
        let value = Arc::new(compute()?);
        let mut guard = self.table().write().expect("memo lock poisoned");
        Ok(guard.entry(key).or_insert(value).clone())
    }
}
