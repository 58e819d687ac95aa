//! Memo tables shared by concurrent readers.
//!
//! With `std` a table sits behind an `RwLock`: lookups take the read lock,
//! and a miss computes the value without holding any lock before taking
//! the write lock to insert it. Without `std` the table is a `RefCell`, and
//! the owning algebra is then not `Sync`.

use alloc::collections::BTreeMap;

#[cfg(not(feature = "std"))]
use core::cell::RefCell;
#[cfg(feature = "std")]
use std::sync::RwLock;

#[derive(Debug, Default)]
pub struct Memo<K, V> {
    #[cfg(feature = "std")]
    table: RwLock<BTreeMap<K, V>>,
    #[cfg(not(feature = "std"))]
    table: RefCell<BTreeMap<K, V>>,
}

impl<K: Ord, V: Clone> Memo<K, V> {
    pub fn new() -> Self {
        Memo {
            table: Default::default(),
        }
    }

    pub fn get(&self, key: &K) -> Option<V> {
        #[cfg(feature = "std")]
        let table = self.table.read().unwrap_or_else(|e| e.into_inner());
        #[cfg(not(feature = "std"))]
        let table = self.table.borrow();
        table.get(key).cloned()
    }

    /// Insert unless already present; the first value written wins.
    pub fn insert(&self, key: K, value: V) -> V {
        #[cfg(feature = "std")]
        let mut table = self.table.write().unwrap_or_else(|e| e.into_inner());
        #[cfg(not(feature = "std"))]
        let mut table = self.table.borrow_mut();
        table.entry(key).or_insert(value).clone()
    }

    pub fn get_or_insert_with(&self, key: K, compute: impl FnOnce() -> V) -> V {
        if let Some(v) = self.get(&key) {
            return v;
        }
        let value = compute();
        self.insert(key, value)
    }

    pub fn len(&self) -> usize {
        #[cfg(feature = "std")]
        let table = self.table.read().unwrap_or_else(|e| e.into_inner());
        #[cfg(not(feature = "std"))]
        let table = self.table.borrow();
        table.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}
