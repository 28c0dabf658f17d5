function Emitter() {
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
Emitter.prototype.listenerCount = function (name) {
  var fns = this.handlers[name];
  return fns ? fns.length : 0;
};
Emitter.prototype.off = function (name, fn) {
  var fns = this.handlers[name];
  if (!fns) { return this; }
  var at = fns.indexOf(fn);
  if (at !== -1) { fns.splice(at, 1); }
  return this;
};
Emitter.prototype.names = function () {
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

module.exports = { Emitter: Emitter };
