/**
 * Vendored toy package sources: five structurally distinct packages,
 * three versions each. Successive versions modify existing function
 * bodies and add new ones, so no version is a token-level subset of
 * another. The detector fingerprints AST node types only, so versions
 * must differ in *structure*, not just names or literal values.
 */

export interface ToyVersion {
  version: string;
  files: Record<string, string>;
}

export interface ToyPackage {
  name: string;
  versions: ToyVersion[];
}

const MATHKIT_CLAMP_OLD = `function clamp(v, lo, hi) {
  if (v < lo) { return lo; }
  if (v > hi) { return hi; }
  return v;
}
`;
const MATHKIT_CLAMP_NEW = `function clamp(v, lo, hi) {
  return Math.min(Math.max(v, lo), hi);
}
`;
const MATHKIT_SUM = `function sum(xs) {
  var s = 0;
  for (var i = 0; i < xs.length; i++) { s += xs[i]; }
  return s;
}
`;
const MATHKIT_MEAN_OLD = `function mean(xs) {
  if (xs.length === 0) { return 0; }
  return sum(xs) / xs.length;
}
`;
const MATHKIT_MEAN_NEW = `function mean(xs) {
  return xs.length === 0 ? 0 : sum(xs) / xs.length;
}
`;
const MATHKIT_SPREAD = `function spread(xs) {
  var hi = xs[0];
  var lo = xs[0];
  for (var i = 1; i < xs.length; i++) {
    if (xs[i] > hi) { hi = xs[i]; }
    if (xs[i] < lo) { lo = xs[i]; }
  }
  return hi - lo;
}
`;
const MATHKIT_MEDIAN = `function median(xs) {
  var s = xs.slice().sort(function (a, b) { return a - b; });
  var mid = Math.floor(s.length / 2);
  return s.length % 2 === 1 ? s[mid] : (s[mid - 1] + s[mid]) / 2;
}
`;

const STRINGS_PAD_OLD = `function pad(text, width) {
  var out = String(text);
  while (out.length < width) { out = ' ' + out; }
  return out;
}
`;
const STRINGS_PAD_NEW = `function pad(text, width) {
  var out = String(text);
  if (out.length >= width) { return out; }
  return new Array(width - out.length + 1).join(' ') + out;
}
`;
const STRINGS_TRIM = `function collapse(text) {
  return text.replace(/\\s+/g, ' ').replace(/^ | $/g, '');
}
`;
const STRINGS_CAMEL_OLD = `function camel(text) {
  var parts = text.split('-');
  var out = parts[0];
  for (var i = 1; i < parts.length; i++) {
    out += parts[i].charAt(0).toUpperCase() + parts[i].slice(1);
  }
  return out;
}
`;
const STRINGS_CAMEL_NEW = `function camel(text) {
  return text.split('-').map(function (part, i) {
    if (i === 0) { return part; }
    return part.charAt(0).toUpperCase() + part.slice(1);
  }).join('');
}
`;
const STRINGS_COUNT = `function count(text, needle) {
  var n = 0;
  var at = text.indexOf(needle);
  while (at !== -1) {
    n++;
    at = text.indexOf(needle, at + needle.length);
  }
  return n;
}
`;
const STRINGS_WRAP = `function wrap(text, width) {
  var words = text.split(' ');
  var lines = [];
  var line = '';
  for (var i = 0; i < words.length; i++) {
    if (line.length + words[i].length + 1 > width && line.length > 0) {
      lines.push(line);
      line = '';
    }
    line = line.length === 0 ? words[i] : line + ' ' + words[i];
  }
  if (line.length > 0) { lines.push(line); }
  return lines;
}
`;

const COLLECT_UNIQ_OLD = `function uniq(items) {
  var out = [];
  for (var i = 0; i < items.length; i++) {
    if (out.indexOf(items[i]) === -1) { out.push(items[i]); }
  }
  return out;
}
`;
const COLLECT_UNIQ_NEW = `function uniq(items) {
  var seen = {};
  return items.filter(function (item) {
    var key = typeof item + ':' + String(item);
    if (seen[key]) { return false; }
    seen[key] = true;
    return true;
  });
}
`;
const COLLECT_GROUP = `function groupBy(items, keyOf) {
  var out = {};
  for (var i = 0; i < items.length; i++) {
    var key = keyOf(items[i]);
    if (!out[key]) { out[key] = []; }
    out[key].push(items[i]);
  }
  return out;
}
`;
const COLLECT_CHUNK_OLD = `function chunk(items, size) {
  var out = [];
  for (var i = 0; i < items.length; i += size) {
    out.push(items.slice(i, i + size));
  }
  return out;
}
`;
const COLLECT_CHUNK_NEW = `function chunk(items, size) {
  var out = [];
  var cursor = 0;
  while (cursor < items.length) {
    var next = cursor + size;
    out.push(items.slice(cursor, next));
    cursor = next;
  }
  return out;
}
`;
const COLLECT_FLAT = `function flatten(items) {
  var out = [];
  items.forEach(function (item) {
    if (Object.prototype.toString.call(item) === '[object Array]') {
      out = out.concat(flatten(item));
    } else {
      out.push(item);
    }
  });
  return out;
}
`;
const COLLECT_ZIP = `function zip(left, right) {
  var n = left.length < right.length ? left.length : right.length;
  var out = [];
  for (var i = 0; i < n; i++) { out.push([left[i], right[i]]); }
  return out;
}
`;

const EVENTS_CORE_OLD = `function Emitter() {
  this.handlers = {};
}
Emitter.prototype.on = function (name, fn) {
  if (!this.handlers[name]) { this.handlers[name] = []; }
  this.handlers[name].push(fn);
  return this;
};
Emitter.prototype.emit = function (name, payload) {
  var fns = this.handlers[name] || [];
  for (var i = 0; i < fns.length; i++) { fns[i](payload); }
  return fns.length;
};
`;
const EVENTS_CORE_NEW = `function Emitter() {
  this.handlers = {};
}
Emitter.prototype.on = function (name, fn) {
  (this.handlers[name] = this.handlers[name] || []).push(fn);
  return this;
};
Emitter.prototype.emit = function (name, payload) {
  var fns = this.handlers[name];
  if (!fns) { return 0; }
  fns.slice().forEach(function (fn) { fn(payload); });
  return fns.length;
};
`;
const EVENTS_LISTENERS_OLD = `Emitter.prototype.listenerCount = function (name) {
  if (!this.handlers[name]) { return 0; }
  return this.handlers[name].length;
};
`;
const EVENTS_LISTENERS_NEW = `Emitter.prototype.listenerCount = function (name) {
  var fns = this.handlers[name];
  return fns ? fns.length : 0;
};
`;
const EVENTS_OFF = `Emitter.prototype.off = function (name, fn) {
  var fns = this.handlers[name];
  if (!fns) { return this; }
  var at = fns.indexOf(fn);
  if (at !== -1) { fns.splice(at, 1); }
  return this;
};
`;
const EVENTS_ONCE = `Emitter.prototype.once = function (name, fn) {
  var self = this;
  function wrapped(payload) {
    self.off(name, wrapped);
    fn(payload);
  }
  return this.on(name, wrapped);
};
`;

const CACHE_CORE_OLD = `function Cache(limit) {
  this.limit = limit;
  this.keys = [];
  this.values = {};
}
Cache.prototype.get = function (key) {
  if (!(key in this.values)) { return undefined; }
  return this.values[key];
};
Cache.prototype.set = function (key, value) {
  if (!(key in this.values)) {
    this.keys.push(key);
    if (this.keys.length > this.limit) {
      var oldest = this.keys.shift();
      delete this.values[oldest];
    }
  }
  this.values[key] = value;
};
`;
const CACHE_CORE_NEW = `function Cache(limit) {
  this.limit = limit;
  this.keys = [];
  this.values = {};
}
Cache.prototype.get = function (key) {
  var hit = key in this.values;
  if (hit) { this.touch(key); }
  return hit ? this.values[key] : undefined;
};
Cache.prototype.touch = function (key) {
  var at = this.keys.indexOf(key);
  if (at > 0) {
    this.keys.splice(at, 1);
    this.keys.unshift(key);
  }
};
Cache.prototype.set = function (key, value) {
  if (!(key in this.values)) {
    this.keys.unshift(key);
    while (this.keys.length > this.limit) {
      var oldest = this.keys.pop();
      delete this.values[oldest];
    }
  }
  this.values[key] = value;
};
`;
const CACHE_HAS_OLD = `Cache.prototype.has = function (key) {
  if (key in this.values) { return true; }
  return false;
};
`;
const CACHE_HAS_NEW = `Cache.prototype.has = function (key) {
  return key in this.values;
};
`;
const CACHE_STATS = `Cache.prototype.stats = function () {
  var used = this.keys.length;
  return { used: used, free: this.limit - used, limit: this.limit };
};
`;

// Version-stable utility blocks, one per package, shared by all of a
// package's versions. They give every artifact enough fingerprint mass
// to clear presence gates without affecting version discrimination.
const MATHKIT_UTILS = `function toNumber(value) {
  if (typeof value === 'number') { return value; }
  var parsed = parseFloat(String(value));
  return isNaN(parsed) ? 0 : parsed;
}
function round(value, places) {
  var factor = Math.pow(10, places || 0);
  return Math.round(value * factor) / factor;
}
function range(start, stop, step) {
  var out = [];
  var s = step || 1;
  for (var v = start; s > 0 ? v < stop : v > stop; v += s) {
    out.push(v);
  }
  return out;
}
function variance(xs) {
  if (xs.length < 2) { return 0; }
  var m = mean(xs);
  var acc = 0;
  for (var i = 0; i < xs.length; i++) {
    acc += (xs[i] - m) * (xs[i] - m);
  }
  return acc / (xs.length - 1);
}
`;
const STRINGS_UTILS = `function repeat(text, count) {
  var out = '';
  for (var i = 0; i < count; i++) { out += text; }
  return out;
}
function startsWith(text, prefix) {
  return text.lastIndexOf(prefix, 0) === 0;
}
function endsWith(text, suffix) {
  var at = text.length - suffix.length;
  return at >= 0 && text.indexOf(suffix, at) === at;
}
function template(text, values) {
  return text.replace(/\\{(\\w+)\\}/g, function (match, key) {
    return key in values ? String(values[key]) : match;
  });
}
function lines(text) {
  var out = text.split(/\\r?\\n/);
  while (out.length > 0 && out[out.length - 1] === '') { out.pop(); }
  return out;
}
`;
const COLLECT_UTILS = `function keysOf(obj) {
  var out = [];
  for (var key in obj) {
    if (Object.prototype.hasOwnProperty.call(obj, key)) { out.push(key); }
  }
  return out;
}
function valuesOf(obj) {
  return keysOf(obj).map(function (key) { return obj[key]; });
}
function partition(items, predicate) {
  var yes = [];
  var no = [];
  for (var i = 0; i < items.length; i++) {
    (predicate(items[i]) ? yes : no).push(items[i]);
  }
  return [yes, no];
}
function countBy(items, keyOf) {
  var out = {};
  items.forEach(function (item) {
    var key = keyOf(item);
    out[key] = (out[key] || 0) + 1;
  });
  return out;
}
`;
const EVENTS_UTILS = `Emitter.prototype.names = function () {
  var out = [];
  for (var name in this.handlers) {
    if (this.handlers[name].length > 0) { out.push(name); }
  }
  return out;
};
Emitter.prototype.clear = function (name) {
  if (name === undefined) {
    this.handlers = {};
  } else {
    delete this.handlers[name];
  }
  return this;
};
Emitter.prototype.pipe = function (name, target, targetName) {
  return this.on(name, function (payload) {
    target.emit(targetName === undefined ? name : targetName, payload);
  });
};
`;
const CACHE_UTILS = `Cache.prototype.remove = function (key) {
  if (!(key in this.values)) { return false; }
  delete this.values[key];
  var at = this.keys.indexOf(key);
  if (at !== -1) { this.keys.splice(at, 1); }
  return true;
};
Cache.prototype.clear = function () {
  this.keys = [];
  this.values = {};
};
Cache.prototype.getOr = function (key, compute) {
  if (key in this.values) { return this.values[key]; }
  var value = compute(key);
  this.set(key, value);
  return value;
};
Cache.prototype.forEach = function (fn) {
  for (var i = 0; i < this.keys.length; i++) {
    fn(this.values[this.keys[i]], this.keys[i]);
  }
};
`;

function mod(body: string, names: string[]): Record<string, string> {
  const pairs = names.map((n) => n + ': ' + n).join(', ');
  return { 'index.js': body + '\nmodule.exports = { ' + pairs + ' };\n' };
}

export const TOY_PACKAGES: ToyPackage[] = [
  {
    name: 'mathkit',
    versions: [
      {
        version: '1.0.0',
        files: mod(MATHKIT_CLAMP_OLD + MATHKIT_SUM + MATHKIT_MEAN_OLD +
                   MATHKIT_UTILS,
                   ['clamp', 'sum', 'mean']),
      },
      {
        version: '1.0.1',
        files: mod(MATHKIT_CLAMP_NEW + MATHKIT_SUM + MATHKIT_MEAN_OLD +
                   MATHKIT_SPREAD + MATHKIT_UTILS,
                   ['clamp', 'sum', 'mean', 'spread']),
      },
      {
        version: '1.1.0',
        files: mod(MATHKIT_CLAMP_NEW + MATHKIT_SUM + MATHKIT_MEAN_NEW +
                   MATHKIT_SPREAD + MATHKIT_MEDIAN + MATHKIT_UTILS,
                   ['clamp', 'sum', 'mean', 'spread', 'median']),
      },
    ],
  },
  {
    name: 'stringbench',
    versions: [
      {
        version: '2.3.0',
        files: mod(STRINGS_PAD_OLD + STRINGS_TRIM + STRINGS_CAMEL_OLD +
                   STRINGS_UTILS,
                   ['pad', 'collapse', 'camel']),
      },
      {
        version: '2.3.1',
        files: mod(STRINGS_PAD_NEW + STRINGS_TRIM + STRINGS_CAMEL_OLD +
                   STRINGS_COUNT + STRINGS_UTILS,
                   ['pad', 'collapse', 'camel', 'count']),
      },
      {
        version: '2.4.0',
        files: mod(STRINGS_PAD_NEW + STRINGS_TRIM + STRINGS_CAMEL_NEW +
                   STRINGS_COUNT + STRINGS_WRAP + STRINGS_UTILS,
                   ['pad', 'collapse', 'camel', 'count', 'wrap']),
      },
    ],
  },
  {
    name: 'collectric',
    versions: [
      {
        version: '0.9.0',
        files: mod(COLLECT_UNIQ_OLD + COLLECT_GROUP + COLLECT_CHUNK_OLD +
                   COLLECT_UTILS,
                   ['uniq', 'groupBy', 'chunk']),
      },
      {
        version: '0.9.1',
        files: mod(COLLECT_UNIQ_NEW + COLLECT_GROUP + COLLECT_CHUNK_OLD +
                   COLLECT_FLAT + COLLECT_UTILS,
                   ['uniq', 'groupBy', 'chunk', 'flatten']),
      },
      {
        version: '0.10.0',
        files: mod(COLLECT_UNIQ_NEW + COLLECT_GROUP + COLLECT_CHUNK_NEW +
                   COLLECT_FLAT + COLLECT_ZIP + COLLECT_UTILS,
                   ['uniq', 'groupBy', 'chunk', 'flatten', 'zip']),
      },
    ],
  },
  {
    name: 'emitterling',
    versions: [
      {
        version: '3.0.0',
        files: mod(EVENTS_CORE_OLD + EVENTS_LISTENERS_OLD + EVENTS_UTILS,
                   ['Emitter']),
      },
      {
        version: '3.0.1',
        files: mod(EVENTS_CORE_OLD + EVENTS_LISTENERS_NEW + EVENTS_OFF +
                   EVENTS_UTILS, ['Emitter']),
      },
      {
        version: '3.1.0',
        files: mod(EVENTS_CORE_NEW + EVENTS_LISTENERS_NEW + EVENTS_OFF +
                   EVENTS_ONCE + EVENTS_UTILS, ['Emitter']),
      },
    ],
  },
  {
    name: 'cachelet',
    versions: [
      {
        version: '1.4.0',
        files: mod(CACHE_CORE_OLD + CACHE_HAS_OLD + CACHE_UTILS, ['Cache']),
      },
      {
        version: '1.4.1',
        files: mod(CACHE_CORE_OLD + CACHE_HAS_NEW + CACHE_STATS +
                   CACHE_UTILS, ['Cache']),
      },
      {
        version: '1.5.0',
        files: mod(CACHE_CORE_NEW + CACHE_HAS_NEW + CACHE_STATS +
                   CACHE_UTILS, ['Cache']),
      },
    ],
  },
];
