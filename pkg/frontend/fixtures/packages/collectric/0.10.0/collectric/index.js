function uniq(items) {
  var seen = {};
  return items.filter(function (item) {
    var key = typeof item + ':' + String(item);
    if (seen[key]) { return false; }
    seen[key] = true;
    return true;
  });
}
function groupBy(items, keyOf) {
  var out = {};
  for (var i = 0; i < items.length; i++) {
    var key = keyOf(items[i]);
    if (!out[key]) { out[key] = []; }
    out[key].push(items[i]);
  }
  return out;
}
function chunk(items, size) {
  var out = [];
  var cursor = 0;
  while (cursor < items.length) {
    var next = cursor + size;
    out.push(items.slice(cursor, next));
    cursor = next;
  }
  return out;
}
function flatten(items) {
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
function zip(left, right) {
  var n = left.length < right.length ? left.length : right.length;
  var out = [];
  for (var i = 0; i < n; i++) { out.push([left[i], right[i]]); }
  return out;
}
function keysOf(obj) {
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

module.exports = { uniq: uniq, groupBy: groupBy, chunk: chunk, flatten: flatten, zip: zip };
