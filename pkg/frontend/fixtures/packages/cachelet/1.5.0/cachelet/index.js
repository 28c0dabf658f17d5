function Cache(limit) {
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
Cache.prototype.has = function (key) {
  return key in this.values;
};
Cache.prototype.stats = function () {
  var used = this.keys.length;
  return { used: used, free: this.limit - used, limit: this.limit };
};
Cache.prototype.remove = function (key) {
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

module.exports = { Cache: Cache };
