function parcelRequire(name) {
  if (name in modules) {
    return modules[name];
  }
  if (name in cache) {
    var m = cache[name];
    delete cache[name];
    var moduleObject = { id: name, exports: {} };
    modules[name] = moduleObject.exports;
    m.call(moduleObject.exports, moduleObject, moduleObject.exports);
    modules[name] = moduleObject.exports;
    return modules[name];
  }
  var err = new Error("Cannot find module '" + name + "'");
  err.code = "MODULE_NOT_FOUND";
  throw err;
}
